#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "partition.hpp"
#include "qpoly.hpp"

namespace hecke {

using FockVector = std::map<Partition, LaurentPoly>;

inline void fock_add(FockVector& x, const Partition& l, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = x.try_emplace(l, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    }
}

inline LaurentPoly fock_coeff(const FockVector& x, const Partition& l) {
    auto it = x.find(l);
    return it == x.end() ? LaurentPoly() : it->second;
}

// Divided power f_i^(k) straight from the node description: adding the set S
// of k addable i-nodes contributes v^N with
//   N = sum over A in S of (#addable i-nodes above A outside S
//                           - #removable i-nodes above A).
inline FockVector f_divided(int i, int k, const FockVector& x, int e) {
    if (k < 0) throw std::invalid_argument("f_divided: negative power");
    if (k == 0) return x;
    FockVector out;
    for (auto& [l, c] : x) {
        auto b = boundary_nodes(l, e, i);
        int na = static_cast<int>(b.addable.size());
        if (na < k) continue;
        std::vector<int> rem_rows;
        for (auto& n : b.removable) rem_rows.push_back(n.row);
        auto removable_above = [&](int row) {
            int s = 0;
            for (int r : rem_rows) s += r < row;
            return s;
        };
        std::vector<bool> chosen(na, false);
        auto rec = [&](auto&& self, int idx, int left) -> void {
            if (left == 0) {
                int expo = 0;
                Partition m = l;
                for (int a = 0; a < na; ++a) {
                    if (!chosen[a]) continue;
                    int above = 0;
                    for (int b2 = 0; b2 < a; ++b2) above += !chosen[b2];
                    expo += above - removable_above(b.addable[a].row);
                    m = add_node(m, b.addable[a]);
                }
                LaurentPoly t = c;
                fock_add(out, m, LaurentPoly::v(expo) * t);
                return;
            }
            if (na - idx < left) return;
            chosen[idx] = true;
            self(self, idx + 1, left - 1);
            chosen[idx] = false;
            self(self, idx + 1, left);
        };
        rec(rec, 0, k);
    }
    return out;
}

inline FockVector f_induct(int i, const FockVector& x, int e) { return f_divided(i, 1, x, e); }

// Reference path: k single steps, then exact division by [k]!.
inline FockVector f_divided_by_steps(int i, int k, const FockVector& x, int e) {
    FockVector y = x;
    for (int s = 0; s < k; ++s) y = f_induct(i, y, e);
    auto qf = quantum_factorial(k);
    for (auto& [l, c] : y) c = c.divexact(qf);
    return y;
}

struct LadderStep {
    int residue, multiplicity;
};

// Ladders l(r,c) = r + (e-1)(c-1) in increasing order; ladder l has residue
// (1 - l) mod e.
inline std::vector<LadderStep> ladder_word(const Partition& mu, int e) {
    if (!is_e_regular(mu, e)) throw std::invalid_argument("ladder_word: partition is not e-regular");
    std::map<int, int> count;
    for (int r = 1; r <= static_cast<int>(mu.size()); ++r)
        for (int c = 1; c <= mu[r - 1]; ++c) ++count[r + (e - 1) * (c - 1)];
    std::vector<LadderStep> w;
    for (auto [l, m] : count) w.push_back({mod(1 - l, e), m});
    return w;
}

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline size_t default_budget() {
    if (const char* s = std::getenv("HECKE_BLOCKS_BUDGET")) {
        try {
            long long v = std::stoll(s);
            if (v >= 1) return static_cast<size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 200000;
}

// Canonical basis columns G(mu) for one e, computed lazily. Computing G(mu)
// pulls in G(nu) for every e-regular nu that needs correcting, always more
// dominant than mu, so the recursion terminates.
class LLT {
public:
    explicit LLT(int e, size_t budget = default_budget()) : e_(e), budget_(budget) {
        if (e < 3) throw std::domain_error("LLT: e = 2 is outside the supported range (need e >= 3)");
    }

    int e() const { return e_; }
    size_t columns_computed() const { return cols_.size(); }

    const FockVector& column(const Partition& mu) {
        if (auto it = cols_.find(mu); it != cols_.end()) return it->second;
        if (!is_e_regular(mu, e_)) throw std::invalid_argument("LLT: column label " + to_string(mu) + " is not e-regular");
        auto blk = block_of(mu, e_);
        size_t bs = block_size(blk);
        if (bs > budget_)
            throw BudgetExceeded("block " + to_string(blk) + " has " + std::to_string(bs) +
                                 " partitions, above the budget of " + std::to_string(budget_) + " (" +
                                 std::to_string(cols_.size()) + " columns computed so far)");
        FockVector a{{Partition{}, LaurentPoly(1)}};
        for (auto& st : ladder_word(mu, e_)) a = f_divided(st.residue, st.multiplicity, a, e_);
        if (!fock_coeff(a, mu).is_monomial(1, 0))
            throw std::logic_error("LLT: ladder induction did not give coefficient 1 at " + to_string(mu));

        // Descending lex order is a linear extension of dominance, so each
        // correction only touches partitions later in this traversal.
        for (auto it = a.rbegin(); it != a.rend();) {
            const Partition nu = it->first;
            if (nu == mu) {
                ++it;
                continue;
            }
            if (!dominates(mu, nu))
                throw std::logic_error("LLT: induced vector for " + to_string(mu) + " has support " + to_string(nu) + " not dominated by it");
            LaurentPoly c = it->second;
            if (c.in_vN() && c.min_deg() >= 1) {
                ++it;
                continue;
            }
            LaurentPoly alpha = c.symmetric_part_at_or_below_zero();
            if (!(c - alpha).is_zero() && (c - alpha).min_deg() < 1)
                throw std::logic_error("LLT: correction at " + to_string(nu) + " leaves non-positive degrees");
            if (!is_e_regular(nu, e_))
                throw std::logic_error("LLT: correction needed at e-singular " + to_string(nu) + " (convention error)");
            const FockVector& g = column(nu); // map nodes are stable across inserts
            for (auto& [l, gc] : g) fock_add(a, l, -(alpha * gc));
            it = std::make_reverse_iterator(a.upper_bound(nu));
        }
        for (auto& [l, c] : a) {
            if (l == mu) continue;
            if (!c.nonnegative() || c.min_deg() < 1)
                throw std::logic_error("LLT: positivity violated at (" + to_string(l) + ", " + to_string(mu) + "): " + c.str());
        }
        return cols_.emplace(mu, std::move(a)).first->second;
    }

    LaurentPoly d(const Partition& lambda, const Partition& mu) { return fock_coeff(column(mu), lambda); }

private:
    int e_;
    size_t budget_;
    std::map<Partition, FockVector> cols_;
};

enum class EntryStatus { exact, lower_bound, unknown };

inline std::string to_string(EntryStatus s) {
    switch (s) {
    case EntryStatus::exact: return "exact";
    case EntryStatus::lower_bound: return "lower_bound";
    default: return "unknown";
    }
}

struct DecompEntry {
    LaurentPoly value;
    EntryStatus status = EntryStatus::exact;
};

struct GradedDecompMatrix {
    BlockId block;
    int p = 0;
    std::vector<Partition> rows, cols;
    std::vector<std::vector<DecompEntry>> entries; // [row][col]

    int row_index(const Partition& l) const {
        for (size_t k = 0; k < rows.size(); ++k)
            if (rows[k] == l) return static_cast<int>(k);
        return -1;
    }
    int col_index(const Partition& l) const {
        for (size_t k = 0; k < cols.size(); ++k)
            if (cols[k] == l) return static_cast<int>(k);
        return -1;
    }
    const DecompEntry& at(const Partition& l, const Partition& m) const {
        int r = row_index(l), c = col_index(m);
        if (r < 0 || c < 0) throw std::out_of_range("decomposition matrix: no entry (" + to_string(l) + ", " + to_string(m) + ")");
        return entries[r][c];
    }
};

inline void check_block_budget(const BlockId& blk, size_t budget) {
    size_t bs = block_size(blk);
    if (bs > budget)
        throw BudgetExceeded("block " + to_string(blk) + " has " + std::to_string(bs) + " partitions, above the budget of " +
                             std::to_string(budget));
}

inline GradedDecompMatrix graded_decomp_matrix_char0(const BlockId& blk, LLT& llt) {
    if (blk.e != llt.e()) throw std::invalid_argument("graded_decomp_matrix_char0: e mismatch");
    GradedDecompMatrix m;
    m.block = blk;
    m.rows = block_partitions(blk);
    for (auto& l : m.rows)
        if (is_e_regular(l, blk.e)) m.cols.push_back(l);
    m.entries.assign(m.rows.size(), std::vector<DecompEntry>(m.cols.size()));
    for (size_t c = 0; c < m.cols.size(); ++c) {
        const auto& g = llt.column(m.cols[c]);
        for (size_t r = 0; r < m.rows.size(); ++r) m.entries[r][c].value = fock_coeff(g, m.rows[r]);
    }
    return m;
}

inline GradedDecompMatrix graded_decomp_matrix_char0(const BlockId& blk) {
    if (blk.e < 3) throw std::domain_error("decomposition matrices need e >= 3");
    LLT llt(blk.e);
    return graded_decomp_matrix_char0(blk, llt);
}

// Unitriangularity, dominance support, positivity and the degree bounds:
// nonzero entries only for mu >= lambda >= m(mu)', v^w at lambda = m(mu)',
// all other off-diagonal degrees at most w-1.
inline std::vector<std::string> degree_check(const GradedDecompMatrix& m) {
    std::vector<std::string> bad;
    int e = m.block.e, w = m.block.w;
    for (size_t c = 0; c < m.cols.size(); ++c) {
        const auto& mu = m.cols[c];
        Partition low = conjugate(mullineux(mu, e));
        for (size_t r = 0; r < m.rows.size(); ++r) {
            const auto& l = m.rows[r];
            const auto& d = m.entries[r][c].value;
            std::string at = "(" + to_string(l) + ", " + to_string(mu) + ")";
            if (l == mu) {
                if (!d.is_monomial(1, 0)) bad.push_back("diagonal entry " + at + " is " + d.str());
                continue;
            }
            if (l == low) {
                if (!d.is_monomial(1, w)) bad.push_back("entry " + at + " at m(mu)' is " + d.str() + ", expected v^" + std::to_string(w));
                continue;
            }
            if (d.is_zero()) continue;
            if (!dominates(mu, l) || !dominates(l, low)) bad.push_back("entry " + at + " outside the dominance window");
            if (!d.nonnegative() || d.min_deg() < 1) bad.push_back("entry " + at + " = " + d.str() + " not in vN[v]");
            if (d.max_deg() > w - 1) bad.push_back("entry " + at + " = " + d.str() + " has degree above w-1");
        }
    }
    return bad;
}

} // namespace hecke
