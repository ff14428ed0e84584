#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

#include "partition.hpp"

namespace hecke {

// beta_i = lambda_i - i + r for i = 1..r, strictly decreasing.
inline std::vector<int> beta_numbers(const Partition& l, int r) {
    if (r < static_cast<int>(l.size())) throw std::invalid_argument("beta_numbers: bead count smaller than partition length");
    std::vector<int> b(r);
    for (int i = 1; i <= r; ++i) b[i - 1] = part(l, i) - i + r;
    return b;
}

inline Partition partition_from_beta(std::vector<int> beads) {
    std::sort(beads.rbegin(), beads.rend());
    int r = static_cast<int>(beads.size());
    Partition l;
    for (int i = 1; i <= r; ++i) {
        if (beads[i - 1] < 0 || (i > 1 && beads[i - 1] == beads[i - 2]))
            throw std::invalid_argument("partition_from_beta: invalid bead set");
        int x = beads[i - 1] + i - r;
        if (x > 0) l.push_back(x);
    }
    return l;
}

// Bead counts per runner (runner = position mod e) of the r-bead display.
inline std::vector<int> runner_counts(const Partition& l, int e, int r) {
    std::vector<int> b(e, 0);
    for (int x : beta_numbers(l, r)) ++b[x % e];
    return b;
}

inline Partition core_from_counts(const std::vector<int>& b) {
    int e = static_cast<int>(b.size());
    std::vector<int> beads;
    for (int c = 0; c < e; ++c)
        for (int k = 0; k < b[c]; ++k) beads.push_back(c + k * e);
    return partition_from_beta(beads);
}

inline Partition e_core(const Partition& l, int e) {
    return core_from_counts(runner_counts(l, e, static_cast<int>(l.size())));
}

inline int weight(const Partition& l, int e) { return (size(l) - size(e_core(l, e))) / e; }

inline bool is_e_core(const Partition& l, int e) { return e_core(l, e) == l; }

// Display size used for cores: every runner is occupied and the runner
// holding the smallest lowest bead carries exactly one bead, at position 0.
inline int core_display_r(const Partition& core, int e) { return static_cast<int>(core.size()) + e; }

// Runner residues ordered by lowest bead position (p-order) for an r-bead
// display of the core; runner_of[i] is the residue of the runner holding p_i.
inline std::vector<int> runners_in_p_order(const Partition& core, int e, int r) {
    auto b = runner_counts(core, e, r);
    std::vector<int> idx(e);
    std::iota(idx.begin(), idx.end(), 0);
    auto low = [&](int c) { return (b[c] - 1) * e + c; };
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return low(x) < low(y); });
    return idx;
}

// p_0 < ... < p_{e-1} in the normalized display.
inline std::vector<int> runner_positions(const Partition& core, int e) {
    if (!is_e_core(core, e)) throw std::invalid_argument("runner_positions: not an e-core");
    int r = core_display_r(core, e);
    auto b = runner_counts(core, e, r);
    std::vector<int> p;
    for (int c = 0; c < e; ++c) p.push_back((b[c] - 1) * e + c);
    std::sort(p.begin(), p.end());
    return p;
}

// Same positions in the convention beta_i = lambda_i - i (no bead offset).
inline std::vector<int> runner_positions_infinite(const Partition& core, int e) {
    auto p = runner_positions(core, e);
    for (auto& x : p) x -= core_display_r(core, e);
    return p;
}

struct BlockId {
    int e = 3;
    Partition core;
    int w = 0;
    int n() const { return size(core) + e * w; }
    friend bool operator==(const BlockId&, const BlockId&) = default;
    friend bool operator<(const BlockId& a, const BlockId& b) {
        return std::tie(a.e, a.w, a.core) < std::tie(b.e, b.w, b.core);
    }
};

inline BlockId make_block(int e, const Partition& core, int w) {
    if (e < 2) throw std::invalid_argument("block: e must be at least 2");
    if (w < 0) throw std::invalid_argument("block: weight must be nonnegative");
    if (!is_e_core(core, e)) throw std::invalid_argument("block: " + to_string(core) + " is not an e-core");
    return {e, core, w};
}

inline BlockId block_of(const Partition& l, int e) { return {e, e_core(l, e), weight(l, e)}; }

inline std::string to_string(const BlockId& b) {
    return "B(e=" + std::to_string(b.e) + ", core=" + to_string(b.core) + ", w=" + std::to_string(b.w) + ")";
}

// Bits _iB_j: 1 iff p_j - p_i < e for 0 <= i <= j < e; 0 when i < 0 or
// j >= e; 1 when i > j.
struct Pyramid {
    int e;
    std::vector<int> p;
    int bit(int i, int j) const {
        if (i < 0 || j >= e) return 0;
        if (i > j) return 1;
        return p[j] - p[i] < e ? 1 : 0;
    }
};

inline Pyramid pyramid(const Partition& core, int e) { return {e, runner_positions(core, e)}; }

// Quotient components read from a display with r beads; component q lives
// on the runner holding p_{e-1-q}.
inline std::vector<Partition> e_quotient(const Partition& l, int e) {
    int r = static_cast<int>(l.size()) + e;
    auto beads = beta_numbers(l, r);
    auto order = runners_in_p_order(e_core(l, e), e, r);
    std::vector<Partition> q(e);
    for (int qi = 0; qi < e; ++qi) {
        int c = order[e - 1 - qi];
        std::vector<int> lv;
        for (int x : beads)
            if (x % e == c) lv.push_back(x / e);
        std::sort(lv.rbegin(), lv.rend());
        int m = static_cast<int>(lv.size());
        Partition k;
        for (int j = 1; j <= m; ++j) {
            int part_j = lv[j - 1] - (m - j);
            if (part_j > 0) k.push_back(part_j);
        }
        q[qi] = k;
    }
    return q;
}

inline Partition partition_from_quotient(const BlockId& blk, const std::vector<Partition>& q) {
    int e = blk.e;
    if (static_cast<int>(q.size()) != e) throw std::invalid_argument("quotient: expected e components");
    int total = 0, longest = 0;
    for (auto& k : q) {
        total += size(k);
        longest = std::max(longest, static_cast<int>(k.size()));
    }
    if (total != blk.w) throw std::invalid_argument("quotient: weight mismatch");
    int r = static_cast<int>(blk.core.size()) + e + e * longest;
    auto b = runner_counts(blk.core, e, r);
    auto order = runners_in_p_order(blk.core, e, r);
    std::vector<int> beads;
    for (int qi = 0; qi < e; ++qi) {
        int c = order[e - 1 - qi];
        int m = b[c];
        for (int j = 1; j <= m; ++j) beads.push_back(((m - j) + part(q[qi], j)) * e + c);
    }
    return partition_from_beta(beads);
}

inline std::string quotient_string(const std::vector<Partition>& q) {
    std::string s = "(";
    for (size_t k = 0; k < q.size(); ++k) {
        if (k) s += " | ";
        s += to_string(q[k]);
    }
    return s + ")";
}

// Angle labels on runner indices i (runner holding p_i). Grammar: a
// comma-separated list of tokens "i" or "i^k".
//   weight 2: <i>=(2) on i, <i,j>=(1),(1), <i^2>=(1^2)
//   weight 3: <i>=(3), <i,j>=(2) on i and (1) on j, <i,i>=(2,1),
//             <i^2,j>=(1^2),(1), <i^3>=(1^3), <i,j,k>=(1) each
// Other weights accept only <i> (a single row) and <i^w> (a single column).
inline Partition angle_label(const BlockId& blk, const std::string& label) {
    int e = blk.e, w = blk.w;
    std::vector<std::pair<int, int>> toks; // runner, exponent (0 = plain)
    std::stringstream ss(label);
    std::string t;
    while (std::getline(ss, t, ',')) {
        auto c = t.find('^');
        int i = std::stoi(t.substr(0, c));
        int k = c == std::string::npos ? 0 : std::stoi(t.substr(c + 1));
        if (i < 0 || i >= e) throw std::invalid_argument("angle label: runner index out of range");
        toks.push_back({i, k});
    }
    std::vector<Partition> byrunner(e);
    auto put = [&](int i, Partition k) {
        if (!byrunner[i].empty()) throw std::invalid_argument("angle label: unsupported label <" + label + ">");
        byrunner[i] = k;
    };
    auto bad = [&]() { throw std::invalid_argument("angle label <" + label + "> does not fit weight " + std::to_string(w)); };
    if (toks.size() == 1) {
        auto [i, k] = toks[0];
        if (k == 0) put(i, {w});
        else if (k == w) put(i, Partition(w, 1));
        else bad();
    } else if (w == 2 && toks.size() == 2 && toks[0].second == 0 && toks[1].second == 0) {
        if (toks[0].first == toks[1].first) bad();
        put(toks[0].first, {1});
        put(toks[1].first, {1});
    } else if (w == 3 && toks.size() == 2) {
        auto [i, ki] = toks[0];
        auto [j, kj] = toks[1];
        if (ki == 0 && kj == 0) {
            if (i == j) put(i, {2, 1});
            else put(i, {2}), put(j, {1});
        } else if (ki == 2 && kj == 0 && i != j) {
            put(i, {1, 1});
            put(j, {1});
        } else {
            bad();
        }
    } else if (w == 3 && toks.size() == 3) {
        for (auto [i, k] : toks) {
            if (k != 0) bad();
            put(i, {1});
        }
    } else {
        bad();
    }
    std::vector<Partition> q(e);
    for (int i = 0; i < e; ++i) q[e - 1 - i] = byrunner[i];
    return partition_from_quotient(blk, q);
}

// All e-multipartitions of total size w.
inline std::vector<std::vector<Partition>> multipartitions(int e, int w) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(e);
    auto rec = [&](auto&& self, int k, int rem) -> void {
        if (k == e - 1) {
            for (auto& p : partitions_of(rem)) {
                cur[k] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int s = 0; s <= rem; ++s)
            for (auto& p : partitions_of(s)) {
                cur[k] = p;
                self(self, k + 1, rem - s);
            }
    };
    if (e == 1) {
        for (auto& p : partitions_of(w)) out.push_back({p});
        return out;
    }
    rec(rec, 0, w);
    return out;
}

// Partitions of the block, lexicographically decreasing (so any partition
// appears after everything strictly dominating it).
inline std::vector<Partition> block_partitions(const BlockId& blk) {
    std::vector<Partition> out;
    for (auto& q : multipartitions(blk.e, blk.w)) out.push_back(partition_from_quotient(blk, q));
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline size_t block_size(const BlockId& blk) { return multipartitions(blk.e, blk.w).size(); }

inline std::vector<Partition> block_regular_partitions(const BlockId& blk) {
    std::vector<Partition> out;
    for (auto& l : block_partitions(blk))
        if (is_e_regular(l, blk.e)) out.push_back(l);
    return out;
}

inline bool in_block(const Partition& l, const BlockId& blk) {
    return size(l) == blk.n() && e_core(l, blk.e) == blk.core;
}

// No sigma of the block with lower strictly dominated by sigma strictly
// dominated by upper.
inline bool dominance_interval_empty(const Partition& lower, const Partition& upper, const BlockId& blk) {
    if (!in_block(lower, blk) || !in_block(upper, blk))
        throw std::invalid_argument("dominance_interval_empty: partitions not in the block");
    for (auto& s : block_partitions(blk))
        if (s != lower && s != upper && dominates(s, lower) && dominates(upper, s)) return false;
    return true;
}

inline BlockId conjugate_block(const BlockId& b) { return {b.e, conjugate(b.core), b.w}; }

} // namespace hecke
