#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "evidence.hpp"
#include "targets.hpp"
#include "witnesses.hpp"

namespace hecke {

// How one submatrix entry was evaluated: the reduction steps applied to the
// pair and the value read off at the end.
struct PairTrace {
    Partition row, column;
    std::vector<PairStep> steps;
    LaurentPoly value;
};

struct Certificate {
    BlockId block;
    int p = 0;
    CertKind kind = CertKind::matrix;
    BlockId witness_block;
    std::string case_description;
    std::vector<Partition> witnesses; // in the order of the target matrix
    std::vector<PairTrace> trace;
    Target target = Target::dagger;
    std::vector<EvidenceItem> evidence;
    std::string citation;
    bool heuristic = false;
};

enum class Verdict { schurian_finite, schurian_infinite, undetermined };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::schurian_finite: return "SchurianFinite";
    case Verdict::schurian_infinite: return "SchurianInfinite";
    default: return "Undetermined";
    }
}

struct Classification {
    Verdict verdict = Verdict::undetermined;
    std::string reason;
    std::optional<Certificate> certificate;
};

// ---- Evaluating and replaying pairs ----------------------------------------

// Value of d^0 at a pair no reduction applies to.
inline LaurentPoly end_value(Engine& eng, int e, const Partition& l, const Partition& m) {
    if (size(l) != size(m) || e_core(l, e) != e_core(m, e) || !dominates(m, l)) return 0;
    if (l == m) return 1;
    return eng.llt(e).d(l, m);
}

inline PairTrace trace_pair(Engine& eng, int e, const Partition& l, const Partition& m) {
    auto ev = evaluate_pair(eng, e, l, m);
    return {l, m, ev.trace, ev.value};
}

// Re-applies recorded steps, checking each one's preconditions. Returns the
// value at the end pair or an error message.
inline std::optional<LaurentPoly> replay_pair(Engine& eng, int e, const PairTrace& t, std::string& err) {
    Partition l = t.row, m = t.column;
    for (auto& s : t.steps) {
        if (s.e != e) {
            err = "step records e=" + std::to_string(s.e) + " but the pair is at e=" + std::to_string(e);
            return std::nullopt;
        }
        if (s.kind == "row_removal") {
            if (l.empty() || m.empty() || l[0] != m[0]) {
                err = "row removal on " + pair_text(l, m) + " with different first rows";
                return std::nullopt;
            }
            l.erase(l.begin());
            m.erase(m.begin());
        } else if (s.kind == "runner_removal") {
            RunnerRemoval rr{s.r, s.runner};
            if (e <= 3 || !runner_removable({l, m}, e, rr)) {
                err = "runner " + std::to_string(s.runner) + " is not removable from " + pair_text(l, m);
                return std::nullopt;
            }
            l = remove_runner(l, e, rr);
            m = remove_runner(m, e, rr);
            --e;
            if (!is_e_regular(m, e)) {
                err = "runner removal leaves a singular column";
                return std::nullopt;
            }
        } else if (s.kind == "scopes") {
            auto mv = scopes_phi(block_of(m, e), s.r, s.runner);
            if (!mv || mv->k != s.k) {
                err = "Scopes move (r=" + std::to_string(s.r) + ", i=" + std::to_string(s.runner) + ") not admissible for " + to_string(block_of(m, e));
                return std::nullopt;
            }
            l = apply_scopes(*mv, e, l);
            m = apply_scopes(*mv, e, m);
        } else {
            err = "unknown step kind '" + s.kind + "'";
            return std::nullopt;
        }
        if (l != s.lambda || m != s.mu) {
            err = "step " + s.kind + " gives " + pair_text(l, m) + ", recorded " + pair_text(s.lambda, s.mu);
            return std::nullopt;
        }
    }
    if (!is_e_regular(m, e)) {
        err = "end column " + to_string(m) + " is not regular";
        return std::nullopt;
    }
    return end_value(eng, e, l, m);
}

// ---- Building certificates --------------------------------------------------

inline bool witnesses_well_formed(const BlockId& blk, const std::vector<Partition>& ws, std::string& err) {
    if (ws.size() != 4 && ws.size() != 5) {
        err = "expected 4 or 5 witnesses, got " + std::to_string(ws.size());
        return false;
    }
    std::set<Partition> seen;
    for (auto& w : ws) {
        if (!in_block(w, blk)) {
            err = "witness " + to_string(w) + " is not in " + to_string(blk);
            return false;
        }
        if (!is_e_regular(w, blk.e)) {
            err = "witness " + to_string(w) + " is not " + std::to_string(blk.e) + "-regular";
            return false;
        }
        if (!seen.insert(w).second) {
            err = "witness " + to_string(w) + " repeated";
            return false;
        }
    }
    return true;
}

inline std::vector<EvidenceItem> ext1_evidence(EvidenceEngine& ev, const BlockId& wb, const std::vector<Partition>& ws, Target t, bool& ok) {
    ok = true;
    std::vector<EvidenceItem> out;
    auto vp = target_v_pairs(t);
    for (size_t j = 0; j < ws.size(); ++j)
        for (size_t i = j + 1; i < ws.size(); ++i) {
            auto dij = ev.d0(wb.e, ws[i], ws[j]), dji = ev.d0(wb.e, ws[j], ws[i]);
            int x = ext1_wt2_char2(ws[i], ws[j], wb, dij, dji);
            int want = std::find(vp.begin(), vp.end(), std::pair<int, int>{static_cast<int>(j), static_cast<int>(i)}) != vp.end();
            EvidenceItem it{ws[i], ws[j], "weight-2 char-2 Ext quiver", {"dim Ext1 = " + std::to_string(x) + ", target edge " + std::to_string(want)}, x == want};
            ok = ok && it.ok;
            out.push_back(it);
        }
    return out;
}

inline std::vector<EvidenceItem> matrix_evidence(EvidenceEngine& ev, const BlockId& wb, int p, const std::vector<Partition>& ws, bool& ok) {
    ok = true;
    std::vector<EvidenceItem> out;
    if (p == 0) return out;
    for (auto& m : ws)
        for (auto& l : ws) {
            if (l == m || !dominates(m, l)) continue;
            auto it = ev.pair(wb.e, l, m, p);
            ok = ok && it.ok;
            out.push_back(it);
            if (!ok) return out;
        }
    return out;
}

// Evaluates a plan inside the witness block; nullopt unless the char-0
// submatrix matches a target and the char-p side is proved.
inline std::optional<Certificate> try_plan(EvidenceEngine& ev, const BlockId& blk, const BlockId& wb, int p, const WitnessPlan& plan,
                                           bool require_expected = false) {
    std::string err;
    if (!witnesses_well_formed(wb, plan.witnesses, err)) return std::nullopt;
    size_t n = plan.witnesses.size();
    PolyMatrix sub(n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sub[i][j] = ev.d0(wb.e, plan.witnesses[i], plan.witnesses[j]);
    auto match = match_target(sub);
    if (!match || (require_expected && match->target != plan.expected)) return std::nullopt;
    if (plan.kind == CertKind::ext1 && (p != 2 || wb.w != 2)) return std::nullopt;
    Certificate c;
    c.block = blk;
    c.p = p;
    c.kind = plan.kind;
    c.witness_block = wb;
    c.case_description = plan.description;
    c.target = match->target;
    for (int k : match->order) c.witnesses.push_back(plan.witnesses[k]);
    for (auto& l : c.witnesses)
        for (auto& m : c.witnesses) c.trace.push_back(trace_pair(ev.engine(), wb.e, l, m));
    bool ok = false;
    if (plan.kind == CertKind::ext1) c.evidence = ext1_evidence(ev, wb, c.witnesses, c.target, ok);
    else c.evidence = matrix_evidence(ev, wb, p, c.witnesses, ok);
    if (!ok) return std::nullopt;
    return c;
}

// ---- Blocks settled by non-matrix arguments ----------------------------------

inline std::optional<std::string> external_citation(const BlockId& blk, int p) {
    if (blk.e != 3 || p != 2 || (blk.w != 2 && blk.w != 3)) return std::nullopt;
    auto rep = scopes_reduce(blk).representative.core;
    if (blk.w == 2 && rep == Partition{3, 1, 1})
        return "e=3, p=2, weight 2, Scopes class of core (3,1^2): uniserial Specht modules give the basic algebra; an idempotent "
               "truncation is a gentle algebra with a band, hence Schurian-infinite (published module-theoretic argument)";
    if (blk.w == 3 && rep == Partition{6, 4, 2, 2, 1, 1})
        return "e=3, p=2, weight 3, Rouquier class of core (6,4,2^2,1^2): explicit homomorphisms between graded Specht modules give "
               "a zigzag square in the Gabriel quiver (published module-theoretic argument)";
    return std::nullopt;
}

// ---- Scopes bookkeeping -----------------------------------------------------

// Scopes moves are involutions on bead displays, so undoing a reduction
// replays its steps backwards.
inline Partition undo_scopes(const std::vector<ScopesStep>& trace, int e, Partition l) {
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) l = apply_scopes(*it, e, l);
    return l;
}

inline bool same_scopes_class(const BlockId& a, const BlockId& b) {
    return a.e == b.e && a.w == b.w && scopes_reduce(a).representative == scopes_reduce(b).representative;
}

// ---- Classification ---------------------------------------------------------

struct ClassifyOptions {
    bool search = false;
    size_t search_limit = 20000; // subsets examined by --search
};

inline std::optional<Certificate> certify_with_plans(EvidenceEngine& ev, const BlockId& blk, const BlockId& wb, int p) {
    for (auto& plan : select_witnesses(wb, p))
        if (auto c = try_plan(ev, blk, wb, p, plan)) return c;
    return std::nullopt;
}

inline std::optional<Certificate> search_witnesses(EvidenceEngine& ev, const BlockId& blk, const BlockId& wb, int p, size_t limit) {
    auto regs = block_regular_partitions(wb);
    size_t n = regs.size(), tried = 0;
    for (size_t k : {4u, 5u}) {
        if (n < k) continue;
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            if (++tried > limit) return std::nullopt;
            WitnessPlan plan{"heuristic subset search", {}, Target::dagger, CertKind::matrix};
            for (auto i : idx) plan.witnesses.push_back(regs[i]);
            if (auto c = try_plan(ev, blk, wb, p, plan)) {
                c->heuristic = true;
                return c;
            }
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

inline Classification classify(Engine& eng, const BlockId& blk_in, int p, ClassifyOptions opt = {}) {
    BlockId blk = make_block(blk_in.e, blk_in.core, blk_in.w);
    if (p < 0) throw std::invalid_argument("classify: characteristic must be nonnegative");
    if (blk.w <= 1) return {Verdict::schurian_finite, "representation-finite (weight at most 1)", std::nullopt};
    if (blk.e == 2) {
        if (p != 2 && blk.w == 2) return {Verdict::schurian_finite, "tame weight-2 block with e=2, p!=2 (known Schurian-finite)", std::nullopt};
        if (p == 2 && blk.w == 2 && blk.n() == 4)
            return {Verdict::schurian_finite, "e=p=2, n=4: Hecke algebra of S_4 (known Schurian-finite)", std::nullopt};
        return {Verdict::undetermined, "e=2 blocks of this weight and characteristic are not decided by these methods", std::nullopt};
    }
    if (auto cite = external_citation(blk, p)) {
        Certificate c;
        c.block = blk;
        c.p = p;
        c.kind = CertKind::paper_external;
        c.witness_block = scopes_reduce(blk).representative;
        c.case_description = "settled outside the matrix method";
        c.citation = *cite;
        return {Verdict::schurian_infinite, "externally proved", c};
    }
    EvidenceEngine ev(eng);
    auto red = scopes_reduce(blk);
    if (auto c = certify_with_plans(ev, blk, red.representative, p)) {
        if (!red.trace.empty()) {
            WitnessPlan back{c->case_description, {}, c->target, c->kind};
            for (auto& w : c->witnesses) back.witnesses.push_back(undo_scopes(red.trace, blk.e, w));
            auto mapped = try_plan(ev, blk, blk, p, back, true);
            if (!mapped) throw std::logic_error("classify: certificate does not survive the Scopes map back to " + to_string(blk));
            c = mapped;
        }
        return {Verdict::schurian_infinite, c->case_description, c};
    }
    auto conj = scopes_reduce(conjugate_block(blk)).representative;
    if (auto c = certify_with_plans(ev, blk, conj, p)) {
        c->case_description = "conjugate block: " + c->case_description;
        return {Verdict::schurian_infinite, c->case_description, c};
    }
    if (opt.search) {
        if (auto c = search_witnesses(ev, blk, red.representative, p, opt.search_limit))
            return {Verdict::schurian_infinite, "heuristic search", c};
    }
    return {Verdict::undetermined, "no witness plan could be verified", std::nullopt};
}

inline Classification classify(const BlockId& blk, int p, ClassifyOptions opt = {}) {
    Engine eng;
    return classify(eng, blk, p, opt);
}

// ---- Verification -----------------------------------------------------------

struct VerifyResult {
    bool ok = false;
    bool external = false;
    std::vector<std::string> messages;
};

inline VerifyResult verify_certificate(Engine& eng, const Certificate& c) {
    VerifyResult r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.messages.push_back(std::move(msg));
        return r;
    };
    try {
        if (c.block.e < 3) return fail("e must be at least 3");
        if (c.block.w < 2) return fail("certificates need weight at least 2");
        if (c.p < 0) return fail("negative characteristic");
        make_block(c.block.e, c.block.core, c.block.w);
        make_block(c.witness_block.e, c.witness_block.core, c.witness_block.w);
        if (c.kind == CertKind::paper_external) {
            auto cite = external_citation(c.block, c.p);
            if (!cite) return fail(to_string(c.block) + " at p=" + std::to_string(c.p) + " is not one of the externally settled blocks");
            r.ok = true;
            r.external = true;
            r.messages.push_back("externally proved: " + *cite);
            return r;
        }
        const BlockId& wb = c.witness_block;
        if (!same_scopes_class(wb, c.block) && !same_scopes_class(wb, conjugate_block(c.block)))
            return fail("witness block " + to_string(wb) + " is neither Scopes-equivalent to the block nor to its conjugate");
        std::string err;
        if (!witnesses_well_formed(wb, c.witnesses, err)) return fail(err);
        size_t n = c.witnesses.size();
        if (c.trace.size() != n * n) return fail("trace has " + std::to_string(c.trace.size()) + " entries, expected " + std::to_string(n * n));
        PolyMatrix sub(n, std::vector<LaurentPoly>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const auto& t = c.trace[i * n + j];
                if (t.row != c.witnesses[i] || t.column != c.witnesses[j]) return fail("trace entry " + std::to_string(i * n + j) + " is for the wrong pair");
                auto v = replay_pair(eng, wb.e, t, err);
                if (!v) return fail("replay of " + pair_text(t.row, t.column) + ": " + err);
                if (!(*v == t.value)) return fail("replay of " + pair_text(t.row, t.column) + " gives " + v->str() + ", recorded " + t.value.str());
                sub[i][j] = *v;
            }
        if (sub != target_matrix(c.target)) return fail("submatrix does not equal the " + to_string(c.target) + " matrix in the recorded order");
        EvidenceEngine ev(eng);
        bool ok = false;
        std::vector<EvidenceItem> again;
        if (c.kind == CertKind::ext1) {
            if (c.p != 2 || wb.w != 2) return fail("Ext quiver evidence needs weight 2 and p = 2");
            again = ext1_evidence(ev, wb, c.witnesses, c.target, ok);
        } else {
            again = matrix_evidence(ev, wb, c.p, c.witnesses, ok);
        }
        if (!ok) return fail("characteristic-" + std::to_string(c.p) + " equality could not be re-derived");
        if (again != c.evidence) return fail("recorded evidence differs from the re-derived evidence");
        r.ok = true;
        r.messages.push_back("verified: " + to_string(c.target) + " with " + std::to_string(n) + " witnesses");
        return r;
    } catch (const std::exception& ex) {
        return fail(std::string("verification error: ") + ex.what());
    }
}

inline VerifyResult verify_certificate(const Certificate& c) {
    Engine eng;
    return verify_certificate(eng, c);
}

// ---- JSON -------------------------------------------------------------------

inline nlohmann::json to_json(const BlockId& b) { return {{"e", b.e}, {"core", to_string(b.core)}, {"weight", b.w}}; }

inline BlockId block_from_json(const nlohmann::json& j) {
    return {j.at("e").get<int>(), parse_partition(j.at("core").get<std::string>()), j.at("weight").get<int>()};
}

inline nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["block"] = to_json(c.block);
    j["p"] = c.p;
    j["kind"] = to_string(c.kind);
    j["verdict"] = "SchurianInfinite";
    if (c.kind == CertKind::paper_external) {
        j["citation"] = c.citation;
        j["case"] = c.case_description;
        return j;
    }
    j["witness_block"] = to_json(c.witness_block);
    j["case"] = c.case_description;
    j["heuristic"] = c.heuristic;
    j["target"] = to_string(c.target);
    auto& ws = j["witnesses"] = nlohmann::json::array();
    for (auto& w : c.witnesses) ws.push_back(to_string(w));
    auto& tr = j["trace"] = nlohmann::json::array();
    for (auto& t : c.trace) {
        nlohmann::json steps = nlohmann::json::array();
        for (auto& s : t.steps)
            steps.push_back({{"kind", s.kind}, {"e", s.e}, {"r", s.r}, {"runner", s.runner}, {"k", s.k}, {"row", to_string(s.lambda)}, {"column", to_string(s.mu)}});
        tr.push_back({{"row", to_string(t.row)}, {"column", to_string(t.column)}, {"steps", steps}, {"value", t.value.str()}});
    }
    auto& ev = j["evidence"] = nlohmann::json::array();
    for (auto& e : c.evidence)
        ev.push_back({{"row", to_string(e.row)}, {"column", to_string(e.column)}, {"rule", e.rule}, {"conditions", e.conditions}});
    return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    c.block = block_from_json(j.at("block"));
    c.p = j.at("p").get<int>();
    c.kind = parse_cert_kind(j.at("kind").get<std::string>());
    c.case_description = j.value("case", "");
    if (c.kind == CertKind::paper_external) {
        c.citation = j.value("citation", "");
        c.witness_block = c.block;
        return c;
    }
    c.witness_block = block_from_json(j.at("witness_block"));
    c.heuristic = j.value("heuristic", false);
    c.target = parse_target(j.at("target").get<std::string>());
    for (auto& w : j.at("witnesses")) c.witnesses.push_back(parse_partition(w.get<std::string>()));
    for (auto& t : j.at("trace")) {
        PairTrace pt;
        pt.row = parse_partition(t.at("row").get<std::string>());
        pt.column = parse_partition(t.at("column").get<std::string>());
        for (auto& s : t.at("steps"))
            pt.steps.push_back({s.at("kind").get<std::string>(), s.at("e").get<int>(), s.at("r").get<int>(), s.at("runner").get<int>(),
                                s.at("k").get<int>(), parse_partition(s.at("row").get<std::string>()), parse_partition(s.at("column").get<std::string>())});
        pt.value = LaurentPoly::parse(t.at("value").get<std::string>());
        c.trace.push_back(pt);
    }
    for (auto& e : j.at("evidence")) {
        EvidenceItem it;
        it.row = parse_partition(e.at("row").get<std::string>());
        it.column = parse_partition(e.at("column").get<std::string>());
        it.rule = e.at("rule").get<std::string>();
        it.conditions = e.at("conditions").get<std::vector<std::string>>();
        it.ok = true;
        c.evidence.push_back(it);
    }
    return c;
}

} // namespace hecke
