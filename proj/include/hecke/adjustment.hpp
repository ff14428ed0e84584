#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abacus.hpp"
#include "fock.hpp"
#include "partition.hpp"
#include "qpoly.hpp"
#include "reductions.hpp"

namespace hecke {

// ---- Runner labels ---------------------------------------------------------

// Nonempty quotient components keyed by runner index (runner i holds p_i).
inline std::vector<std::pair<int, Partition>> runner_components(const Partition& l, int e) {
    auto q = e_quotient(l, e);
    std::vector<std::pair<int, Partition>> out;
    for (int i = 0; i < e; ++i)
        if (!q[e - 1 - i].empty()) out.push_back({i, q[e - 1 - i]});
    return out;
}

enum class Shape2 { row, column, pair };

struct Label2 {
    Shape2 shape;
    int i = -1, j = -1;
    friend bool operator==(const Label2&, const Label2&) = default;
};

inline Label2 label_wt2(const Partition& l, int e) {
    auto c = runner_components(l, e);
    int tot = 0;
    for (auto& [r, k] : c) tot += size(k);
    if (tot != 2) throw std::invalid_argument("label_wt2: " + to_string(l) + " does not have weight 2");
    if (c.size() == 2) return {Shape2::pair, c[0].first, c[1].first};
    return {c[0].second.size() == 1 ? Shape2::row : Shape2::column, c[0].first};
}

// Weight-3 label shapes: <a>, <a,a>, <a^3>, <a,b> (2 on a, 1 on b),
// <a^2,b>, <a,b,c> with a < b < c.
enum class Shape3 { row, hook, column, two_one, column_one, three };

struct Label3 {
    Shape3 shape;
    int a = -1, b = -1, c = -1;
    friend bool operator==(const Label3&, const Label3&) = default;

    // Same text the angle_label parser accepts.
    std::string str() const {
        auto s = [](int x) { return std::to_string(x); };
        switch (shape) {
        case Shape3::row: return s(a);
        case Shape3::hook: return s(a) + "," + s(a);
        case Shape3::column: return s(a) + "^3";
        case Shape3::two_one: return s(a) + "," + s(b);
        case Shape3::column_one: return s(a) + "^2," + s(b);
        default: return s(a) + "," + s(b) + "," + s(c);
        }
    }
};

inline Label3 label_wt3(const Partition& l, int e) {
    auto c = runner_components(l, e);
    int tot = 0;
    for (auto& [r, k] : c) tot += size(k);
    if (tot != 3) throw std::invalid_argument("label_wt3: " + to_string(l) + " does not have weight 3");
    if (c.size() == 1) {
        const auto& k = c[0].second;
        Shape3 sh = k.size() == 1 ? Shape3::row : k.size() == 2 ? Shape3::hook : Shape3::column;
        return {sh, c[0].first};
    }
    if (c.size() == 3) return {Shape3::three, c[0].first, c[1].first, c[2].first};
    auto [big, small] = size(c[0].second) == 2 ? std::pair{c[0], c[1]} : std::pair{c[1], c[0]};
    return {big.second.size() == 1 ? Shape3::two_one : Shape3::column_one, big.first, small.first};
}

// Consecutive lowest-bead gaps all exceed (w-1)e.
inline bool is_rouquier(const BlockId& blk) {
    auto p = runner_positions(blk.core, blk.e);
    for (int i = 1; i < blk.e; ++i)
        if (p[i] - p[i - 1] <= (blk.w - 1) * blk.e) return false;
    return true;
}

// ---- Weight 2, characteristic 2 -------------------------------------------

inline void require_weight(const BlockId& blk, int w, const char* who) {
    if (blk.w != w) throw std::invalid_argument(std::string(who) + ": block weight is " + std::to_string(blk.w) + ", expected " + std::to_string(w));
}

// The i with nu = <i^2> and p_i - p_{i-1} > e, if any.
inline std::optional<int> special_column_runner(const Partition& nu, const BlockId& blk) {
    auto ln = label_wt2(nu, blk.e);
    auto pyr = pyramid(blk.core, blk.e);
    if (ln.shape == Shape2::column && ln.i >= 1 && pyr.bit(ln.i - 1, ln.i) == 0) return ln.i;
    return std::nullopt;
}

inline LaurentPoly adjust_wt2_char2(const Partition& nu, const Partition& mu, const BlockId& blk) {
    require_weight(blk, 2, "adjust_wt2_char2");
    if (!in_block(nu, blk) || !in_block(mu, blk)) throw std::invalid_argument("adjust_wt2_char2: partitions not in the block");
    if (nu == mu) return 1;
    auto i = special_column_runner(nu, blk);
    if (!i) return 0;
    auto pyr = pyramid(blk.core, blk.e);
    auto lm = label_wt2(mu, blk.e);
    if (lm.shape == Shape2::row && lm.i == *i && pyr.bit(*i, *i + 1) == 0) return 1;
    if (lm.shape == Shape2::pair && lm.i == *i && lm.j == *i + 1 && *i < blk.e - 1 && pyr.bit(*i, *i + 1) == 1) return 1;
    return 0;
}

// Ext^1 between simples in a weight-2 block at p = 2. d_lm and d_ml are the
// char-0 entries d(lambda, mu) and d(mu, lambda); adjacency means one is v.
inline int ext1_wt2_char2(const Partition& lambda, const Partition& mu, const BlockId& blk, const LaurentPoly& d_lm,
                          const LaurentPoly& d_ml) {
    require_weight(blk, 2, "ext1_wt2_char2");
    if (lambda == mu) throw std::invalid_argument("ext1_wt2_char2: needs two different partitions");
    if (!is_e_regular(lambda, blk.e) || !is_e_regular(mu, blk.e)) throw std::invalid_argument("ext1_wt2_char2: partitions must be e-regular");
    auto pyr = pyramid(blk.core, blk.e);
    auto special_pair = [&](const Partition& s, const Partition& o) -> std::optional<int> {
        auto i = special_column_runner(s, blk);
        if (!i) return std::nullopt;
        auto lo = label_wt2(o, blk.e);
        bool hit = (lo.shape == Shape2::row && lo.i == *i && pyr.bit(*i, *i + 1) == 0) ||
                   (lo.shape == Shape2::pair && lo.i == *i && lo.j == *i + 1 && pyr.bit(*i, *i + 1) == 1);
        return hit ? 1 : 0;
    };
    if (auto r = special_pair(lambda, mu)) return *r;
    if (auto r = special_pair(mu, lambda)) return *r;
    LaurentPoly v = LaurentPoly::v(1);
    return d_lm == v || d_ml == v ? 1 : 0;
}

// ---- Weight 3: semisimple induction ----------------------------------------

struct SemiSimpleTarget {
    Label3 omega;
    std::string lambda_form;             // the matched row, e.g. "<i,i+1>"
    std::vector<std::string> conditions; // evaluated inequalities
};

// Rows of the condition table for indices 1 <= i < k. Positions p_j with
// j >= e are taken far beyond p_{e-1}.
inline std::vector<SemiSimpleTarget> induces_semisimply(const Partition& l, const BlockId& blk) {
    require_weight(blk, 3, "induces_semisimply");
    if (!in_block(l, blk)) throw std::invalid_argument("induces_semisimply: " + to_string(l) + " is not in the block");
    int e = blk.e;
    auto p = runner_positions(blk.core, e);
    auto P = [&](int j) -> long long {
        if (j < 0) throw std::logic_error("induces_semisimply: negative runner index");
        if (j < e) return p[j];
        return p[e - 1] + 1000LL * e * (j - e + 1);
    };
    auto lab = label_wt3(l, e);
    std::vector<SemiSimpleTarget> out;

    struct Cond {
        int x, y;  // P(x) - P(y)
        char op;   // '>' or '<'
        int m;     // compared with m*e
    };
    auto name = [e](int j) { return j < e ? "p" + std::to_string(j) : "p" + std::to_string(j) + "(far)"; };
    auto check = [&](const std::vector<Cond>& cs, std::vector<std::string>& log) {
        for (auto& c : cs) {
            long long d = P(c.x) - P(c.y);
            bool ok = c.op == '>' ? d > 1LL * c.m * e : d < 1LL * c.m * e;
            std::string dv = c.x < e ? std::to_string(d) : "far";
            log.push_back(name(c.x) + "-" + name(c.y) + "=" + dv + (c.op == '>' ? ">" : "<") + std::to_string(c.m * e));
            if (!ok) return false;
        }
        return true;
    };
    auto rowmatch = [&](const Label3& pat, const Label3& omega, const std::string& form, std::vector<Cond> cs) {
        if (!(lab == pat)) return;
        std::vector<std::string> log;
        if (check(cs, log)) out.push_back({omega, form, log});
    };
    using S = Shape3;
    for (int i = 1; i < e; ++i) {
        rowmatch({S::row, i}, {S::row, i}, "<i>", {{i + 1, i, '>', 2}});
        if (i + 1 < e) rowmatch({S::two_one, i, i + 1}, {S::row, i}, "<i,i+1>", {{i + 1, i, '<', 2}, {i + 2, i, '>', 1}});
        if (i + 2 < e) rowmatch({S::three, i, i + 1, i + 2}, {S::row, i}, "<i,i+1,i+2>", {{i + 2, i, '<', 1}});
        rowmatch({S::hook, i}, {S::hook, i}, "<i,i>", {{i + 1, i, '>', 1}, {i, i - 1, '>', 1}});
        if (i + 1 < e) rowmatch({S::column_one, i, i + 1}, {S::hook, i}, "<i^2,i+1>", {{i + 1, i, '<', 1}, {i, i - 1, '>', 1}});
        rowmatch({S::column, i}, {S::column, i}, "<i^3>", {{i, i - 1, '>', 2}});
        for (int k = i + 1; k < e; ++k) {
            rowmatch({S::two_one, i, k}, {S::two_one, i, k}, "<i,k>", {{k, i, '>', 2}, {i + 1, i, '>', 1}});
            if (i + 1 < k) rowmatch({S::three, i, i + 1, k}, {S::two_one, i, k}, "<i,i+1,k>", {{k, i + 1, '>', 1}, {i + 1, i, '<', 1}});
            rowmatch({S::column_one, k, i}, {S::two_one, i, k}, "<k^2,i>",
                     {{k, i + 1, '<', 1}, {k, i, '<', 2}, {k, i - 1, '>', 1}});
            rowmatch({S::two_one, k, i}, {S::two_one, k, i}, "<k,i>", {{k + 1, k, '>', 1}, {k, i, '>', 1}});
            rowmatch({S::hook, k}, {S::two_one, k, i}, "<k,k>", {{k + 1, k, '>', 1}, {k, i, '<', 1}, {k, i - 1, '>', 1}});
            if (k + 1 < e) rowmatch({S::three, i, k, k + 1}, {S::two_one, k, i}, "<i,k,k+1>", {{k + 1, k, '<', 1}, {k, i, '>', 1}});
            if (k + 1 < e)
                rowmatch({S::column_one, k, k + 1}, {S::two_one, k, i}, "<k^2,k+1>",
                         {{k + 1, k, '<', 1}, {k, i, '<', 1}, {k, i - 1, '>', 1}});
            rowmatch({S::column_one, i, k}, {S::column_one, i, k}, "<i^2,k>", {{k, i, '>', 1}, {i, i - 1, '>', 1}});
            rowmatch({S::column, k}, {S::column_one, i, k}, "<k^3>", {{k, i, '<', 1}, {k, i - 1, '>', 2}});
            rowmatch({S::column_one, k, i}, {S::column_one, k, i}, "<k^2,i>", {{k, i, '>', 2}, {k, k - 1, '>', 1}});
            rowmatch({S::column, k}, {S::column_one, k, i}, "<k^3>",
                     {{k, i, '<', 2}, {k, i, '>', 1}, {k, i - 1, '>', 2}, {k, k - 1, '<', 2}, {k, k - 1, '>', 1}});
        }
    }
    return out;
}

struct AdjustmentEntry {
    Partition nu, mu;
    LaurentPoly value;
    EntryStatus status = EntryStatus::exact;
    std::string rule;
};

inline bool has_target(const std::vector<SemiSimpleTarget>& ts, const Label3& w) {
    for (auto& t : ts)
        if (t.omega == w) return true;
    return false;
}

// Weight-3 adjustment coefficient at p = 2 or 3. Rouquier blocks use the
// closed form; other blocks go through semisimple induction. At p = 2 a
// column inducing to <i> may also be hit through "almost semisimple"
// induction, which is not decided here: such entries come back unknown.
inline AdjustmentEntry adjust_wt3(const Partition& nu, const Partition& mu, int p, const BlockId& blk) {
    require_weight(blk, 3, "adjust_wt3");
    if (p != 2 && p != 3) throw std::invalid_argument("adjust_wt3: p must be 2 or 3");
    if (!in_block(nu, blk) || !in_block(mu, blk)) throw std::invalid_argument("adjust_wt3: partitions not in the block");
    AdjustmentEntry a{nu, mu, 0, EntryStatus::exact, ""};
    if (nu == mu) {
        a.value = 1;
        a.rule = "diagonal";
        return a;
    }
    if (!dominates(mu, nu)) {
        a.rule = "not dominated";
        return a;
    }
    using S = Shape3;
    if (is_rouquier(blk)) {
        auto ln = label_wt3(nu, blk.e), lm = label_wt3(mu, blk.e);
        bool one = false;
        if (p == 2) {
            one = (ln.shape == S::column && lm.shape == S::row && ln.a == lm.a && ln.a >= 1) ||
                  (ln.shape == S::column_one && lm.shape == S::two_one && ln.a == lm.a && ln.b == lm.b && ln.a >= 1 && ln.b >= 1);
        } else {
            one = (ln.shape == S::column && lm.shape == S::hook && ln.a == lm.a && ln.a >= 1) ||
                  (ln.shape == S::hook && lm.shape == S::row && ln.a == lm.a && ln.a >= 1);
        }
        a.value = one ? 1 : 0;
        a.rule = "rouquier weight 3: <" + ln.str() + "> vs <" + lm.str() + ">";
        return a;
    }
    auto tn = induces_semisimply(nu, blk), tm = induces_semisimply(mu, blk);
    for (auto& om : tm) {
        const Label3& w = om.omega;
        bool hit = false;
        if (p == 2 && w.shape == S::row) hit = has_target(tn, {S::column, w.a});
        if (p == 2 && w.shape == S::two_one) hit = has_target(tn, {S::column_one, w.a, w.b});
        if (p == 3 && w.shape == S::hook) hit = has_target(tn, {S::column, w.a});
        if (p == 3 && w.shape == S::row) hit = has_target(tn, {S::hook, w.a});
        if (hit) {
            a.value = 1;
            a.rule = "semisimple induction: column to <" + w.str() + ">";
            return a;
        }
    }
    if (p == 2)
        for (auto& om : tm)
            if (om.omega.shape == S::row) {
                a.status = EntryStatus::unknown;
                a.rule = "column induces to <" + om.omega.str() + ">; almost semisimple induction undecided";
                return a;
            }
    a.rule = "no semisimple induction match";
    return a;
}

// ---- Jantzen coefficients --------------------------------------------------

// nu_{e,p}(h): 0 unless e | h, then 1 + (p-adic valuation of h/e) for p > 0.
inline int nu_ep(int h, int e, int p) {
    if (h % e != 0) return 0;
    int v = 1, q = h / e;
    if (p > 0)
        while (q % p == 0) {
            q /= p;
            ++v;
        }
    return v;
}

// Coefficient of [S^mu] in the Jantzen sum of S^lambda. In beads: a bead X
// moves up by t and a lower bead Y moves down by t (a rim hook of length t is
// unwrapped and wrapped back higher), weighted by nu(X - Y + t) - nu(t) and
// signed by the parity of the beads each move jumps over.
inline long long jantzen_coefficient(const Partition& lambda, const Partition& mu, int e, int p) {
    if (size(lambda) != size(mu) || lambda == mu || !dominates(mu, lambda)) return 0;
    int r = static_cast<int>(std::max(lambda.size(), mu.size())) + 1;
    auto B = beta_numbers(lambda, r);
    auto target = beta_numbers(mu, r);
    std::sort(target.begin(), target.end());
    int top = B.front() + size(lambda) + 1;
    std::vector<char> occ(top + 1, 0);
    for (int x : B) occ[x] = 1;
    auto between = [&](int lo, int hi) {
        int c = 0;
        for (int x = lo + 1; x < hi; ++x) c += occ[x];
        return c;
    };
    long long J = 0;
    for (int X : B)
        for (int Y : B) {
            if (Y >= X) continue;
            for (int t = 1; Y - t >= 0; ++t) {
                if (X + t > top || occ[X + t] || occ[Y - t]) continue;
                int wgt = nu_ep(X - Y + t, e, p) - nu_ep(t, e, p);
                if (wgt == 0) continue;
                std::vector<int> nb;
                for (int x : B)
                    if (x != X && x != Y) nb.push_back(x);
                nb.push_back(X + t);
                nb.push_back(Y - t);
                std::sort(nb.begin(), nb.end());
                if (nb != target) continue;
                int g = Y - t;
                int sgn = (between(X, X + t) + between(g, Y)) % 2 ? -1 : 1;
                J += sgn * wgt;
            }
        }
    return J;
}

// ---- Quotient preservation and restriction ---------------------------------

inline bool quotient_sizes_equal(const Partition& nu, const Partition& mu, int e) {
    auto a = e_quotient(nu, e), b = e_quotient(mu, e);
    for (int i = 0; i < e; ++i)
        if (size(a[i]) != size(b[i])) return false;
    return true;
}

// Strip every removable i-node from both; applicable when both have the same
// number k of them and the stripped partitions have exactly k addable i-nodes.
inline std::optional<std::pair<Partition, Partition>> restriction_bound(const Partition& lambda, const Partition& mu, int e, int i) {
    auto bl = boundary_nodes(lambda, e, i), bm = boundary_nodes(mu, e, i);
    size_t k = bl.removable.size();
    if (bm.removable.size() != k) return std::nullopt;
    if (k == 0) return std::make_pair(lambda, mu);
    auto strip = [](Partition l, const std::vector<Node>& nodes) {
        for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) l = remove_node(l, *it);
        return l;
    };
    Partition lb = strip(lambda, bl.removable), mb = strip(mu, bm.removable);
    if (boundary_nodes(lb, e, i).addable.size() != k || boundary_nodes(mb, e, i).addable.size() != k) return std::nullopt;
    return std::make_pair(lb, mb);
}

// ---- Characteristic-p matrices ---------------------------------------------

// d^p = d^0 * A over the regular columns. Statuses: exact where every
// adjustment coefficient that meets the row is known, else lower_bound.
inline GradedDecompMatrix decomp_char_p(const BlockId& blk, int p, LLT& llt) {
    if (blk.e < 3) throw std::domain_error("decomp_char_p: e = 2 is not supported");
    if (p < 0) throw std::invalid_argument("decomp_char_p: negative characteristic");
    auto m = graded_decomp_matrix_char0(blk, llt);
    m.p = p;
    int w = blk.w;
    if (p == 0 || (p > w && w <= 4)) return m;
    bool wt2 = w == 2 && p == 2, wt3 = w == 3 && (p == 2 || p == 3);
    if (!wt2 && !wt3) {
        for (auto& row : m.entries)
            for (auto& x : row) x.status = EntryStatus::lower_bound;
        for (size_t c = 0; c < m.cols.size(); ++c) m.entries[m.row_index(m.cols[c])][c].status = EntryStatus::exact;
        return m;
    }
    auto d0 = m.entries;
    size_t nc = m.cols.size();
    for (size_t c = 0; c < nc; ++c) {
        for (size_t n = 0; n < nc; ++n) {
            if (n == c) continue;
            LaurentPoly a;
            EntryStatus st = EntryStatus::exact;
            if (wt2) {
                a = adjust_wt2_char2(m.cols[n], m.cols[c], blk);
            } else {
                auto ae = adjust_wt3(m.cols[n], m.cols[c], p, blk);
                a = ae.value;
                st = ae.status;
            }
            for (size_t r = 0; r < m.rows.size(); ++r) {
                const auto& dn = d0[r][n].value;
                if (dn.is_zero()) continue;
                if (!a.is_zero()) m.entries[r][c].value += dn * a;
                if (st != EntryStatus::exact) m.entries[r][c].status = EntryStatus::lower_bound;
            }
        }
    }
    return m;
}

inline GradedDecompMatrix decomp_char_p(const BlockId& blk, int p) {
    if (blk.e < 3) throw std::domain_error("decomp_char_p: e = 2 is not supported");
    LLT llt(blk.e);
    return decomp_char_p(blk, p, llt);
}

// Marks an entry exact once its value at v = 1 is known to equal the char-0
// value; the polynomial is then the char-0 one.
inline void upgrade_entry(GradedDecompMatrix& m, const Partition& lambda, const Partition& mu, const LaurentPoly& char0) {
    int r = m.row_index(lambda), c = m.col_index(mu);
    if (r < 0 || c < 0) throw std::out_of_range("upgrade_entry: no such entry");
    m.entries[r][c] = {char0, EntryStatus::exact};
}

} // namespace hecke
