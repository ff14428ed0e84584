#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "adjustment.hpp"
#include "reductions.hpp"
#include "targets.hpp"

namespace hecke {

// How the char-p side of a certificate is argued.
enum class CertKind { matrix, ext1, paper_external };

inline std::string to_string(CertKind k) {
    switch (k) {
    case CertKind::matrix: return "matrix";
    case CertKind::ext1: return "ext1";
    default: return "paper_external";
    }
}

inline CertKind parse_cert_kind(const std::string& s) {
    if (s == "matrix") return CertKind::matrix;
    if (s == "ext1") return CertKind::ext1;
    if (s == "paper_external") return CertKind::paper_external;
    throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

struct WitnessPlan {
    std::string description;
    std::vector<Partition> witnesses;
    Target expected;
    CertKind kind = CertKind::matrix;
};

// Lowest-bead gaps of the top four runners; a missing runner counts as
// infinitely far below.
struct RunnerGaps {
    int e;
    long long d1, d2, d13, d14;
    bool lt(long long d) const { return d < e; }
    bool mid(long long d) const { return d > e && d < 2 * e; }
    bool far(long long d) const { return d > 2 * e; }
};

inline RunnerGaps runner_gaps(const BlockId& blk) {
    int e = blk.e;
    auto p = runner_positions(blk.core, e);
    const long long inf = 1LL << 40;
    auto P = [&](int i) -> long long { return i >= 0 ? p[i] : -inf; };
    return {e, P(e - 1) - P(e - 2), P(e - 2) - P(e - 3), P(e - 1) - P(e - 3), P(e - 1) - P(e - 4)};
}

namespace detail {

// Angle-label text with runner offsets counted from the top: "1" is e-1.
inline std::string label_text(int e, const std::vector<std::pair<int, int>>& toks) {
    std::string s;
    for (auto [off, k] : toks) {
        if (!s.empty()) s += ',';
        s += std::to_string(e - off);
        if (k > 1) s += '^' + std::to_string(k);
    }
    return s;
}

struct PlanBuilder {
    const BlockId& blk;
    std::vector<WitnessPlan>& out;

    std::optional<Partition> label(const std::vector<std::pair<int, int>>& toks) const {
        for (auto [off, k] : toks)
            if (blk.e - off < 0) return std::nullopt;
        try {
            return angle_label(blk, label_text(blk.e, toks));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    std::optional<Partition> quot(const std::vector<Partition>& comps) const {
        if (static_cast<int>(comps.size()) > blk.e) return std::nullopt;
        std::vector<Partition> q(blk.e);
        for (size_t i = 0; i < comps.size(); ++i) q[i] = comps[i];
        try {
            return partition_from_quotient(blk, q);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    void add(std::string desc, const std::vector<std::optional<Partition>>& ws, Target t, CertKind k = CertKind::matrix) const {
        std::vector<Partition> v;
        for (auto& w : ws) {
            if (!w) return;
            v.push_back(*w);
        }
        out.push_back({std::move(desc), std::move(v), t, k});
    }
};

} // namespace detail

// Runner offsets: {1,1} is <e-1>, {1,2} is <(e-1)^2>, pairs list several
// tokens. Weight-2 plans.
inline void weight2_plans(const BlockId& blk, int p, std::vector<WitnessPlan>& out) {
    detail::PlanBuilder b{blk, out};
    auto g = runner_gaps(blk);
    int e = blk.e;
    auto L = [&](std::vector<std::pair<int, int>> t) { return b.label(t); };
    auto case1 = [&] {
        b.add("weight 2, p_{e-1}-p_{e-3} < e", {L({{1, 1}}), L({{2, 1}}), L({{3, 1}}), L({{3, 1}, {1, 1}})}, Target::dagger);
    };
    auto case24 = [&](const char* d) {
        b.add(d, {L({{1, 1}}), L({{2, 1}}), L({{2, 1}, {1, 1}}), L({{1, 2}})}, Target::dagger);
    };
    auto lemma_rouquish = [&](bool close) {
        if (e < 4) return;
        auto l1 = b.quot({{1}, {1}}), l2 = b.quot({{1}, {}, {1}});
        if (close)
            b.add("weight 2, p_{e-1}-p_{e-2} > e, p_{e-2}-p_{e-3} < e, e >= 4: four-runner witnesses", {l1, l2, b.quot({{}, {2}}), b.quot({{}, {}, {2}})},
                  Target::ddagger);
        else
            b.add("weight 2, both gaps > e, e >= 4: four-runner witnesses", {l1, l2, b.quot({{}, {1, 1}}), b.quot({{}, {1}, {1}})},
                  Target::ddagger);
    };
    auto case3 = [&] {
        std::vector<std::optional<Partition>> ws{L({{1, 1}}), L({{2, 1}, {1, 1}}), L({{2, 1}}), L({{3, 1}})};
        if (p == 2) lemma_rouquish(true);
        b.add("weight 2, p_{e-1}-p_{e-2} > e, p_{e-2}-p_{e-3} < e", ws, Target::dagger);
        if (p == 2) b.add("weight 2, p_{e-1}-p_{e-2} > e, p_{e-2}-p_{e-3} < e: Ext quiver in char 2", ws, Target::dagger, CertKind::ext1);
    };
    auto case5 = [&] {
        if (p == 2 && e >= 4) {
            lemma_rouquish(false);
            auto pyr = pyramid(blk.core, e);
            if (pyr.bit(e - 4, e - 3) == 0)
                b.add("weight 2, both gaps > e, p_{e-3}-p_{e-4} > e: Ext quiver in char 2",
                      {L({{2, 1}, {1, 1}}), L({{3, 1}, {1, 1}}), L({{2, 1}}), L({{3, 1}, {2, 1}})}, Target::ddagger, CertKind::ext1);
            else
                b.add("weight 2, both gaps > e, p_{e-3}-p_{e-4} < e: Ext quiver in char 2",
                      {L({{2, 1}}), L({{3, 1}, {2, 1}}), L({{3, 1}}), L({{4, 1}})}, Target::dagger, CertKind::ext1);
        }
        b.add("weight 2, both gaps > e", {L({{1, 1}}), L({{1, 2}}), L({{2, 1}, {1, 1}}), L({{2, 1}}), L({{2, 2}})}, Target::spade);
    };
    if (g.lt(g.d13)) case1();
    else if (g.lt(g.d1) && g.lt(g.d2)) case24("weight 2, both gaps < e, p_{e-1}-p_{e-3} > e");
    else if (!g.lt(g.d1) && g.lt(g.d2)) case3();
    else if (g.lt(g.d1)) case24("weight 2, p_{e-1}-p_{e-2} < e, p_{e-2}-p_{e-3} > e");
    else case5();
}

// Weight-3 plans, characteristic-specific variants first.
inline void weight3_plans(const BlockId& blk, int p, std::vector<WitnessPlan>& out) {
    detail::PlanBuilder b{blk, out};
    auto g = runner_gaps(blk);
    auto L = [&](std::vector<std::pair<int, int>> t) { return b.label(t); };
    // Token helpers: row(o) = <e-o>, hook(o) = <e-o,e-o>, col(o) = <(e-o)^3>,
    // two(o1,o2) = <e-o1,e-o2>, colone(o1,o2) = <(e-o1)^2,e-o2>.
    auto row = [&](int o) { return L({{o, 1}}); };
    auto hook = [&](int o) { return L({{o, 1}, {o, 1}}); };
    auto col = [&](int o) { return L({{o, 3}}); };
    auto two = [&](int a, int c) { return L({{a, 1}, {c, 1}}); };
    auto colone = [&](int a, int c) { return L({{a, 2}, {c, 1}}); };
    auto three = [&](int a, int c, int d) { return L({{a, 1}, {c, 1}, {d, 1}}); };
    if (g.lt(g.d13)) {
        b.add("weight 3, p_{e-1}-p_{e-3} < e", {row(3), two(1, 3), two(2, 3), two(3, 2)}, Target::dagger);
    } else if (g.lt(g.d1) && g.lt(g.d2)) {
        b.add("weight 3, both gaps < e, p_{e-1}-p_{e-3} > e", {row(2), two(1, 2), row(3), two(2, 3)}, Target::dagger);
    } else if (!g.lt(g.d1) && g.lt(g.d2)) {
        const char* d = "weight 3, p_{e-1}-p_{e-2} > e, p_{e-2}-p_{e-3} < e";
        if (p == 2)
            b.add(std::string(d) + ", char-2 variant", {hook(1), colone(1, 2), two(2, 1), two(3, 1)}, Target::dagger2);
        b.add(d, {hook(1), two(1, 2), colone(1, 2), colone(1, 3)}, Target::dagger);
        b.add(d, {colone(1, 2), two(3, 1), row(3), two(2, 3)}, Target::dagger2);
        b.add(d, {two(2, 1), two(3, 1), row(2), row(3)}, Target::ddagger);
    } else if (g.lt(g.d1)) {
        const char* d = "weight 3, p_{e-1}-p_{e-2} < e, p_{e-2}-p_{e-3} > e";
        if (p == 2) b.add(std::string(d) + ", char-2 variant", {row(2), two(1, 2), hook(1), hook(2)}, Target::dagger2);
        b.add(d, {hook(1), hook(2), colone(1, 2), colone(2, 1)}, Target::ddagger);
        b.add(d, {row(2), two(1, 2), hook(1), hook(2)}, Target::dagger2);
        b.add(d, {row(1), row(2), two(1, 2), hook(1)}, Target::dagger);
    } else {
        const char* d = "weight 3, both gaps > e";
        if (p == 2) {
            if (blk.e >= 4) {
                b.add(std::string(d) + ", char-2, e >= 4", {colone(1, 2), colone(1, 3), colone(2, 1), three(3, 2, 1)}, Target::ddagger);
                b.add(std::string(d) + ", char-2, e >= 4", {col(1), colone(1, 3), colone(2, 1), three(3, 2, 1)}, Target::ddagger);
            }
            b.add(std::string(d) + ", char-2 variant", {two(1, 2), row(2), two(2, 1), colone(1, 2)}, Target::dagger);
        }
        b.add(d, {hook(1), two(1, 2), colone(1, 2), col(1)}, Target::dagger);
        b.add(d, {colone(1, 2), two(2, 1), colone(2, 1), hook(2)}, Target::ddagger);
        b.add(d, {two(1, 2), colone(1, 2), col(1), colone(2, 1)}, Target::dagger1);
        b.add(d, {two(1, 2), colone(1, 2), two(2, 1), colone(2, 1)}, Target::club);
    }
}

// Weight >= 4: slide the top bead down w-2 places on four or five
// partitions; removing the first row lands in a weight-2 plan.
inline void table_plans(const BlockId& blk, int p, std::vector<WitnessPlan>& out) {
    detail::PlanBuilder b{blk, out};
    auto g = runner_gaps(blk);
    int W = blk.w - 2, e = blk.e;
    Partition top{W}, top1{W, 1}, top2{W, 2}, top11{W, 1, 1};
    Partition two{2}, one{1}, col{1, 1}, none{};
    auto Q = [&](std::vector<Partition> c) { return b.quot(c); };
    auto row = [&](int n, std::vector<std::optional<Partition>> ws, Target t) {
        b.add("weight " + std::to_string(blk.w) + ", slide-and-remove-first-row case " + std::to_string(n), ws, t);
    };
    auto r2 = [&](int n) { row(n, {Q({top2}), Q({top, two}), Q({top1, one}), Q({top11})}, Target::dagger); };
    bool d1a = g.lt(g.d1), d1b = g.mid(g.d1), d1g = g.far(g.d1);
    bool d2a = g.lt(g.d2), d2d = !g.lt(g.d2);
    if (d1b && d2a && g.mid(g.d13)) row(1, {Q({top2}), Q({top, two}), Q({top, none, two}), Q({top1, none, one})}, Target::dagger);
    if (d1b && d2a && g.far(g.d13)) r2(2);
    if (d1g && d2a && p != 2) row(3, {Q({top2}), Q({top1, one}), Q({top, two}), Q({top, none, two})}, Target::dagger);
    if (d1g && d2a && p == 2 && e >= 4)
        row(4, {Q({top1, one}), Q({top1, none, one}), Q({top, two}), Q({top, none, two})}, Target::ddagger);
    if (d1b && d2d) r2(5);
    if (d1g && d2d && p != 2)
        b.add("weight " + std::to_string(blk.w) + ", slide-and-remove-first-row case 6",
              {Q({top2}), Q({top11}), Q({top1, one}), Q({top, two}), Q({top, col})}, Target::spade);
    if (d1g && d2d && p == 2 && e >= 4)
        row(7, {Q({top1, one}), Q({top1, none, one}), Q({top, col}), Q({top, one, one})}, Target::ddagger);
    if (g.lt(g.d14)) row(8, {Q({top, two}), Q({top, none, two}), Q({top, none, none, two}), Q({top, one, none, one})}, Target::dagger);
    if (g.lt(g.d13) && !g.lt(g.d14)) row(9, {Q({top, two}), Q({top, none, two}), Q({top2}), Q({top1, one})}, Target::dagger);
    if (d1a && d2a && g.mid(g.d13)) row(10, {Q({top, two}), Q({top2}), Q({top, none, two}), Q({top, one, one})}, Target::dagger);
    if (d1a && d2d) row(11, {Q({top, two}), Q({top2}), Q({top1, one}), Q({top, col})}, Target::dagger);
}

// e = 3, p = 2, w >= 4 beyond the slide-and-remove table.
inline void e3_char2_plans(const BlockId& blk, std::vector<WitnessPlan>& out) {
    detail::PlanBuilder b{blk, out};
    int w = blk.w;
    auto Q = [&](std::vector<Partition> c) { return b.quot(c); };
    if (w == 4) {
        b.add("weight 4, e=3: quotient witnesses near the Rouquier class",
              {Q({{1, 1}, {1, 1}}), Q({{1}, {2, 1}}), Q({{1}, {1, 1, 1}}), Q({{}, {2, 1, 1}})}, Target::ddagger);
        return;
    }
    b.add("weight " + std::to_string(w) + ", e=3: first row over a weight-3 class",
          {Q({{w - 3, 2}, {1}}), Q({{w - 3}, {3}}), Q({{w - 3, 1}, {2}}), Q({{w - 3, 1, 1}, {1}})}, Target::dagger);
    b.add("weight " + std::to_string(w) + ", e=3: first row over a weight-4 class",
          {Q({{w - 4, 1, 1}, {1, 1}}), Q({{w - 4, 1}, {2, 1}}), Q({{w - 4, 1}, {1, 1, 1}}), Q({{w - 4}, {2, 1, 1}})}, Target::ddagger);
}

inline std::vector<WitnessPlan> select_witnesses(const BlockId& blk, int p) {
    if (blk.e == 2) throw std::domain_error("select_witnesses: e = 2 is not supported");
    if (blk.w <= 1) throw std::invalid_argument("select_witnesses: weight must be at least 2");
    std::vector<WitnessPlan> out;
    if (blk.w == 2) weight2_plans(blk, p, out);
    else if (blk.w == 3) weight3_plans(blk, p, out);
    else {
        if (blk.e == 3 && p == 2) {
            auto g = runner_gaps(blk);
            if (g.far(g.d1)) {
                e3_char2_plans(blk, out);
                table_plans(blk, p, out);
            } else {
                table_plans(blk, p, out);
                e3_char2_plans(blk, out);
            }
        } else {
            table_plans(blk, p, out);
        }
    }
    return out;
}

} // namespace hecke
