#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "adjustment.hpp"
#include "reductions.hpp"

namespace hecke {

// Why d^p(row, column)(1) equals d^0(row, column)(1) for one pair.
struct EvidenceItem {
    Partition row, column;
    std::string rule;
    std::vector<std::string> conditions;
    bool ok = false;
    friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

inline std::string pair_text(const Partition& a, const Partition& b) { return "(" + to_string(a) + ", " + to_string(b) + ")"; }

inline std::string step_text(const PairStep& s) {
    if (s.kind == "row_removal") return "remove first row -> " + pair_text(s.lambda, s.mu);
    if (s.kind == "runner_removal")
        return "remove runner " + std::to_string(s.runner) + " (r=" + std::to_string(s.r) + ", e=" + std::to_string(s.e) + ") -> " +
               pair_text(s.lambda, s.mu);
    return "swap runners " + std::to_string(s.runner - 1) + "," + std::to_string(s.runner) + " (r=" + std::to_string(s.r) +
           ", k=" + std::to_string(s.k) + ") -> " + pair_text(s.lambda, s.mu);
}

class EvidenceEngine {
public:
    explicit EvidenceEngine(Engine& eng) : eng_(eng) {}

    Engine& engine() { return eng_; }

    LaurentPoly d0(int e, const Partition& l, const Partition& m) { return evaluate_pair(eng_, e, l, m).value; }

    EvidenceItem pair(int e, const Partition& l, const Partition& m, int p) { return pair_impl(e, l, m, p, true); }

private:
    Engine& eng_;
    std::map<std::tuple<int, Partition, Partition, int>, EvidenceItem> memo_;

    EvidenceItem pair_impl(int e, const Partition& l, const Partition& m, int p, bool allow_sandwich) {
        auto key = std::make_tuple(e, l, m, p * 2 + (allow_sandwich ? 1 : 0));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        auto res = compute(e, l, m, p, allow_sandwich);
        memo_[key] = res;
        return res;
    }

    EvidenceItem compute(int e, const Partition& l, const Partition& m, int p, bool allow_sandwich) {
        EvidenceItem it{l, m, "", {}, false};
        auto done = [&](std::string rule) {
            it.rule = std::move(rule);
            it.ok = true;
            return it;
        };
        if (p == 0) return done("characteristic zero");
        if (l == m) return done("diagonal");
        if (!dominates(m, l)) return done("column does not dominate row");
        auto blk = block_of(m, e);
        if (p > blk.w && blk.w <= 4) {
            it.conditions.push_back("p=" + std::to_string(p) + " > w=" + std::to_string(blk.w) + ", w <= 4");
            return done("large characteristic");
        }
        // Row removal and Scopes moves hold in every characteristic; runner
        // removal does not, so it stays off here.
        auto tr = transport_pair(e, l, m, {false, true, true});
        for (auto& s : tr.trace) it.conditions.push_back(step_text(s));
        const auto& ls = tr.lambda;
        const auto& ms = tr.mu;
        if (ls == ms || !dominates(ms, ls)) return done("trivial after reduction");
        auto bs = block_of(ms, e);
        if (p > bs.w && bs.w <= 4) {
            it.conditions.push_back("reduced weight " + std::to_string(bs.w) + " < p=" + std::to_string(p));
            return done("large characteristic after reduction");
        }
        std::vector<std::string> why;
        std::string rule;
        if (adjustments_vanish(bs, ls, ms, p, why, rule)) {
            it.conditions.insert(it.conditions.end(), why.begin(), why.end());
            return done(rule);
        }
        if (allow_sandwich) {
            std::vector<std::string> chain;
            if (sandwich(e, ls, ms, p, chain)) {
                it.conditions.insert(it.conditions.end(), chain.begin(), chain.end());
                return done("restriction sandwich");
            }
        }
        it.conditions.insert(it.conditions.end(), why.begin(), why.end());
        it.rule = "unproved";
        return it;
    }

    // d^p(l,m) = sum over regular nu of d^0(l,nu) a(nu,m); every nu other
    // than m with d^0(l,nu) != 0 must have a(nu,m) = 0.
    bool adjustments_vanish(const BlockId& bs, const Partition& l, const Partition& m, int p, std::vector<std::string>& why,
                            std::string& rule) {
        int e = bs.e;
        bool wt2 = bs.w == 2 && p == 2, wt3 = bs.w == 3 && (p == 2 || p == 3);
        bool rouq4 = bs.w == 4 && e == 3 && p == 2 && is_rouquier(bs);
        rule = wt2 ? "weight-2 char-2 adjustment" : wt3 ? "weight-3 adjustment" : rouq4 ? "rouquier quotient preservation" : "jantzen vanishing";
        bool all = true;
        for (auto& nu : block_regular_partitions(bs)) {
            if (nu == m || !dominates(nu, l) || !dominates(m, nu)) continue;
            auto dn = eng_.llt(e).d(l, nu);
            if (dn.is_zero()) continue;
            std::string tag = "nu=" + to_string(nu) + ": ";
            if (wt2) {
                auto a = adjust_wt2_char2(nu, m, bs);
                if (a.is_zero()) {
                    why.push_back(tag + "a=0 (pyramid rule)");
                    continue;
                }
                why.push_back(tag + "a=" + a.str());
                all = false;
                continue;
            }
            if (wt3) {
                auto a = adjust_wt3(nu, m, p, bs);
                if (a.status == EntryStatus::exact && a.value.is_zero()) {
                    why.push_back(tag + "a=0 (" + a.rule + ")");
                    continue;
                }
                if (a.status == EntryStatus::exact) {
                    why.push_back(tag + "a=" + a.value.str() + " (" + a.rule + ")");
                    all = false;
                    continue;
                }
            }
            if (rouq4 && !quotient_sizes_equal(nu, m, e)) {
                why.push_back(tag + "a=0 (quotient sizes differ)");
                continue;
            }
            if (dominance_interval_empty(nu, m, bs) && jantzen_coefficient(nu, m, e, p) == 0) {
                why.push_back(tag + "a=0 (empty dominance interval, Jantzen coefficient 0)");
                continue;
            }
            why.push_back(tag + "a not shown to vanish");
            all = false;
        }
        return all;
    }

    // Chains of inverse Scopes moves and full i-node lifts from (l,m) to a
    // pair whose equality is proved directly. Along a lift d^p can only grow,
    // so d^0(l,m) <= d^p(l,m) <= d^p(end) = d^0(end) closes the gap when the
    // char-0 values agree.
    bool sandwich(int e, const Partition& l0, const Partition& m0, int p, std::vector<std::string>& chain) {
        struct Node {
            Partition l, m;
            std::vector<std::string> path;
        };
        const int max_depth = 4;
        const size_t max_nodes = 4000;
        auto target = eng_.llt(e).d(l0, m0).eval_one();
        std::deque<Node> q{{l0, m0, {}}};
        std::set<std::pair<Partition, Partition>> seen{{l0, m0}};
        size_t visited = 0;
        while (!q.empty() && visited < max_nodes) {
            Node cur = q.front();
            q.pop_front();
            ++visited;
            if (!cur.path.empty()) {
                auto ev = pair_impl(e, cur.l, cur.m, p, false);
                if (ev.ok) {
                    auto end = d0(e, cur.l, cur.m).eval_one();
                    if (end == target) {
                        chain = cur.path;
                        chain.push_back("end pair proved by " + ev.rule + "; d0(1)=" + std::to_string(end) + " at both ends");
                        return true;
                    }
                }
            }
            if (static_cast<int>(cur.path.size()) >= max_depth) continue;
            auto push = [&](Partition a, Partition b, std::string how) {
                if (!seen.insert({a, b}).second) return;
                auto path = cur.path;
                path.push_back(how + " -> " + pair_text(a, b));
                q.push_back({std::move(a), std::move(b), std::move(path)});
            };
            auto core = e_core(cur.m, e);
            int w = weight(cur.m, e);
            int r0 = core_display_r(core, e);
            for (int r = r0; r < r0 + e; ++r) {
                auto b = runner_counts(core, e, r);
                for (int i = 1; i < e; ++i)
                    if (b[i - 1] - b[i] >= w)
                        push(swap_runners(cur.l, e, r, i), swap_runners(cur.m, e, r, i),
                             "inverse Scopes swap of runners " + std::to_string(i - 1) + "," + std::to_string(i) + " (r=" + std::to_string(r) + ")");
            }
            for (int i = 0; i < e; ++i) {
                auto al = boundary_nodes(cur.l, e, i).addable, am = boundary_nodes(cur.m, e, i).addable;
                if (al.empty() || al.size() != am.size()) continue;
                Partition L = cur.l, M = cur.m;
                for (auto& n : al) L = add_node(L, n);
                for (auto& n : am) M = add_node(M, n);
                if (!is_e_regular(M, e)) continue;
                auto back = restriction_bound(L, M, e, i);
                if (!back || back->first != cur.l || back->second != cur.m) continue;
                push(L, M, "add all " + std::to_string(al.size()) + " addable " + std::to_string(i) + "-nodes");
            }
        }
        return false;
    }
};

} // namespace hecke
