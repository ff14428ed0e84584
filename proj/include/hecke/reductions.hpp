#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abacus.hpp"
#include "fock.hpp"
#include "partition.hpp"

namespace hecke {

// ---- Scopes moves -------------------------------------------------------

// Swap of positional runners i-1 and i (1 <= i < e) in the r-bead display,
// where runner i carries k more beads than runner i-1.
struct ScopesStep {
    int r = 0, i = 0, k = 0;
    Partition from_core, to_core;
    friend bool operator==(const ScopesStep&, const ScopesStep&) = default;
};

// Exchange the contents of runners i-1 and i. Runs in a display with r + t*e
// beads so long partitions fit; adding whole rows of beads keeps runner labels.
inline Partition swap_runners(const Partition& l, int e, int r, int i) {
    int rr = r;
    while (rr < static_cast<int>(l.size())) rr += e;
    auto beads = beta_numbers(l, rr);
    for (auto& x : beads) {
        if (x % e == i) --x;
        else if (x % e == i - 1) ++x;
    }
    return partition_from_beta(beads);
}

inline Partition apply_scopes(const ScopesStep& s, int e, const Partition& l) { return swap_runners(l, e, s.r, s.i); }

// Admissible moves for the block: every positional pair under the
// renormalizations r0, ..., r0+e-1, where r0 is the normalized display.
inline std::vector<ScopesStep> scopes_candidates(const BlockId& blk) {
    std::vector<ScopesStep> out;
    int e = blk.e, r0 = core_display_r(blk.core, e);
    for (int r = r0; r < r0 + e; ++r) {
        auto b = runner_counts(blk.core, e, r);
        for (int i = 1; i < e; ++i) {
            int k = b[i] - b[i - 1];
            if (k >= blk.w && blk.w > 0) out.push_back({r, i, k, blk.core, swap_runners(blk.core, e, r, i)});
        }
    }
    return out;
}

inline std::optional<ScopesStep> scopes_phi(const BlockId& blk, int r, int i) {
    for (auto& s : scopes_candidates(blk))
        if (s.r == r && s.i == i) return s;
    return std::nullopt;
}

struct ScopesReduction {
    BlockId representative;
    std::vector<ScopesStep> trace;
};

// Greedy: always the admissible move with the largest bead difference
// (ties broken by smallest r, then smallest i).
inline ScopesReduction scopes_reduce(const BlockId& blk) {
    ScopesReduction res{blk, {}};
    for (;;) {
        auto c = scopes_candidates(res.representative);
        if (c.empty()) break;
        auto best = c.front();
        for (auto& s : c)
            if (s.k > best.k) best = s;
        res.trace.push_back(best);
        res.representative.core = best.to_core;
    }
    return res;
}

inline Partition replay_scopes(const std::vector<ScopesStep>& trace, int e, Partition l) {
    for (auto& s : trace) l = apply_scopes(s, e, l);
    return l;
}

// Reduction in an arbitrary admissible order chosen by `pick`; used to test
// that the end point does not depend on the order.
template <class Pick>
BlockId scopes_reduce_with(const BlockId& blk, Pick&& pick) {
    BlockId cur = blk;
    for (;;) {
        auto c = scopes_candidates(cur);
        if (c.empty()) return cur;
        cur.core = c[pick(c.size())].to_core;
    }
}

// ---- Scopes classes ------------------------------------------------------

// Cores with no admissible move at weight w, one per class. The differences
// d_i = b_i - b_{i-1} (i >= 1) and d_0 = b_0 - b_{e-1} - 1 sum to -1; a core
// is minimal iff every d_i <= w - 1. Vectors are taken up to rotation.
inline std::vector<Partition> scopes_minimal_cores(int e, int w) {
    std::vector<Partition> out;
    std::map<Partition, bool> seen;
    int total = e * (w - 1) + 1; // sum of x_i = (w-1) - d_i
    std::vector<int> x(e, 0);
    auto emit = [&]() {
        std::vector<int> d(e);
        for (int k = 0; k < e; ++k) d[k] = (w - 1) - x[k];
        std::vector<int> b(e);
        b[0] = 0;
        for (int k = 1; k < e; ++k) b[k] = b[k - 1] + d[k];
        int lo = *std::min_element(b.begin(), b.end());
        for (auto& y : b) y += 1 - lo;
        auto core = core_from_counts(b);
        if (!seen[core]) {
            seen[core] = true;
            out.push_back(core);
        }
    };
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == e - 1) {
            x[k] = left;
            emit();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            x[k] = v;
            self(self, k + 1, left - v);
        }
    };
    rec(rec, 0, total);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return size(a) != size(b) ? size(a) < size(b) : a > b;
    });
    return out;
}

// Positional bead counts [s0, s1, s2] of the Scopes-minimal core (e = 3).
inline std::vector<int> scopes_triple(const Partition& core, int w) {
    if (!is_e_core(core, 3)) throw std::invalid_argument("scopes_triple: not a 3-core");
    auto rep = scopes_reduce({3, core, w}).representative.core;
    return runner_counts(rep, 3, core_display_r(rep, 3));
}

inline Partition core_from_triple(const std::vector<int>& t) { return core_from_counts(t); }

inline std::vector<int> conjugate_triple(const std::vector<int>& t, int w) {
    return scopes_triple(conjugate(core_from_triple(t)), w);
}

// ---- Runner removal ------------------------------------------------------

struct RunnerRemoval {
    int r = 0;      // shared display size
    int runner = 0; // positional runner deleted
};

inline Partition remove_runner(const Partition& l, int e, const RunnerRemoval& rr) {
    std::vector<int> out;
    for (int x : beta_numbers(l, rr.r)) {
        int c = x % e;
        if (c == rr.runner) continue;
        out.push_back((x / e) * (e - 1) + (c < rr.runner ? c : c - 1));
    }
    return partition_from_beta(out);
}

// Whether, in the shared display, every bead of the runner comes before the
// first gap of each display in the set.
inline bool runner_removable(const std::vector<Partition>& ls, int e, const RunnerRemoval& rr) {
    for (auto& l : ls) {
        auto beads = beta_numbers(l, rr.r);
        std::vector<bool> occ(beads.empty() ? 1 : beads.front() + 2, false);
        for (int x : beads) occ[x] = true;
        int gap = 0;
        while (occ[gap]) ++gap;
        for (int x : beads)
            if (x % e == rr.runner && x > gap) return false;
    }
    return true;
}

inline std::optional<RunnerRemoval> find_runner_removal(const std::vector<Partition>& ls, int e) {
    int len = 0;
    for (auto& l : ls) len = std::max(len, static_cast<int>(l.size()));
    int r = len + e;
    for (int c = 0; c < e; ++c) {
        RunnerRemoval rr{r, c};
        if (runner_removable(ls, e, rr)) return rr;
    }
    return std::nullopt;
}

inline std::optional<std::pair<std::vector<Partition>, int>> runner_removal(const std::vector<Partition>& ls, int e, int runner,
                                                                           int r) {
    RunnerRemoval rr{r, runner};
    if (!runner_removable(ls, e, rr)) return std::nullopt;
    std::vector<Partition> out;
    for (auto& l : ls) out.push_back(remove_runner(l, e, rr));
    return std::make_pair(out, e - 1);
}

// ---- Row and column removal ----------------------------------------------

struct RowSplit {
    Partition lambda_top, mu_top, lambda_bottom, mu_bottom;
};

inline std::optional<RowSplit> row_removal_split(const Partition& l, const Partition& m, int r) {
    int sl = 0, sm = 0;
    for (int k = 1; k <= r; ++k) sl += part(l, k), sm += part(m, k);
    if (sl != sm || size(l) != size(m)) return std::nullopt;
    RowSplit s;
    auto cut = [r](const Partition& p, Partition& top, Partition& bottom) {
        for (int k = 0; k < static_cast<int>(p.size()); ++k) (k < r ? top : bottom).push_back(p[k]);
    };
    cut(l, s.lambda_top, s.lambda_bottom);
    cut(m, s.mu_top, s.mu_bottom);
    return s;
}

inline std::optional<RowSplit> column_removal_split(const Partition& l, const Partition& m, int r) {
    auto s = row_removal_split(conjugate(l), conjugate(m), r);
    if (!s) return std::nullopt;
    return RowSplit{conjugate(s->lambda_top), conjugate(s->mu_top), conjugate(s->lambda_bottom), conjugate(s->mu_bottom)};
}

// ---- Pair transport ------------------------------------------------------

struct PairStep {
    std::string kind; // row_removal | runner_removal | scopes
    int e = 0;        // modulus before the step
    int r = 0, runner = 0, k = 0;
    Partition lambda, mu; // pair after the step
};

struct PairEvaluation {
    LaurentPoly value;
    std::vector<PairStep> trace;
    int e = 0;
    Partition lambda, mu;      // pair at which the value was read off
    bool by_llt = false;       // false when settled by lambda == mu or non-dominance
};

// Caches one LLT engine per e.
class Engine {
public:
    explicit Engine(size_t budget = default_budget()) : budget_(budget) {}
    LLT& llt(int e) {
        auto& p = llt_[e];
        if (!p) p = std::make_unique<LLT>(e, budget_);
        return *p;
    }
    size_t budget() const { return budget_; }

private:
    size_t budget_;
    std::map<int, std::unique_ptr<LLT>> llt_;
};

// Options for transport: char-p safe evaluation forbids runner removal.
struct TransportOptions {
    bool allow_runner_removal = true;
    bool allow_row_removal = true;
    bool allow_scopes = true;
};

// Moves the pair through row removal (first rows equal), runner removal
// (e > 3, shared bead/gap condition, regular target) and Scopes reduction
// until none applies; returns the final pair without evaluating it.
inline PairEvaluation transport_pair(int e, Partition l, Partition m, TransportOptions opt = {}) {
    PairEvaluation ev;
    for (;;) {
        if (l == m || !dominates(m, l) || e_core(l, e) != e_core(m, e)) break;
        if (opt.allow_row_removal && !l.empty() && l[0] == m[0]) {
            l.erase(l.begin());
            m.erase(m.begin());
            ev.trace.push_back({"row_removal", e, 1, 0, 0, l, m});
            continue;
        }
        if (opt.allow_runner_removal && e > 3) {
            auto rr = find_runner_removal({l, m}, e);
            if (rr) {
                auto l2 = remove_runner(l, e, *rr), m2 = remove_runner(m, e, *rr);
                if (is_e_regular(m2, e - 1)) {
                    l = l2;
                    m = m2;
                    ev.trace.push_back({"runner_removal", e, rr->r, rr->runner, 0, l, m});
                    --e;
                    continue;
                }
            }
        }
        if (opt.allow_scopes) {
            auto blk = block_of(m, e);
            auto red = scopes_reduce(blk);
            if (!red.trace.empty()) {
                for (auto& s : red.trace) {
                    l = apply_scopes(s, e, l);
                    m = apply_scopes(s, e, m);
                    ev.trace.push_back({"scopes", e, s.r, s.i, s.k, l, m});
                }
                continue;
            }
        }
        break;
    }
    ev.e = e;
    ev.lambda = l;
    ev.mu = m;
    return ev;
}

inline PairEvaluation evaluate_pair(Engine& eng, int e, const Partition& l, const Partition& m, TransportOptions opt = {}) {
    if (!is_e_regular(m, e)) throw std::invalid_argument("evaluate_pair: column " + to_string(m) + " is not e-regular");
    auto ev = transport_pair(e, l, m, opt);
    if (size(ev.lambda) != size(ev.mu) || e_core(ev.lambda, ev.e) != e_core(ev.mu, ev.e)) {
        ev.value = 0;
    } else if (ev.lambda == ev.mu) {
        ev.value = 1;
    } else if (!dominates(ev.mu, ev.lambda)) {
        ev.value = 0;
    } else {
        ev.value = eng.llt(ev.e).d(ev.lambda, ev.mu);
        ev.by_llt = true;
    }
    return ev;
}

} // namespace hecke
