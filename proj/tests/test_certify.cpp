#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <hecke/certify.hpp>

using namespace hecke;

static Partition P(const char* s) { return parse_partition(s); }

static Engine& engine() {
    static Engine eng;
    return eng;
}

static PolyMatrix llt_matrix(int e, const std::vector<Partition>& ps) {
    PolyMatrix m(ps.size(), std::vector<LaurentPoly>(ps.size()));
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j) m[i][j] = end_value(engine(), e, ps[i], ps[j]);
    return m;
}

TEST_CASE("target matrices are lower unitriangular") {
    for (auto t : all_targets()) {
        auto m = target_matrix(t);
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m.size(); ++j) {
                if (i == j) CHECK(m[i][j] == 1);
                if (j > i) CHECK(m[i][j].is_zero());
            }
        CHECK(parse_target(to_string(t)) == t);
        auto mt = match_target(m);
        REQUIRE(mt.has_value());
        CHECK(mt->target == t);
    }
}

TEST_CASE("the identity matches no target") {
    PolyMatrix id(4, std::vector<LaurentPoly>(4));
    for (int i = 0; i < 4; ++i) id[i][i] = 1;
    CHECK_FALSE(match_target(id).has_value());
}

TEST_CASE("matching finds a reordered target") {
    auto m = target_matrix(Target::ddagger);
    std::vector<int> order{3, 1, 0, 2};
    auto shuffled = permuted(m, order);
    auto mt = match_target(shuffled);
    REQUIRE(mt.has_value());
    CHECK(mt->target == Target::ddagger);
    CHECK(permuted(shuffled, mt->order) == m);
}

TEST_CASE("weight-4 Rouquier quotient witnesses give the ddagger matrix") {
    auto core = core_from_triple({1, 4, 7});
    auto blk = make_block(3, core, 4);
    std::vector<std::vector<Partition>> qs = {
        {P("1,1"), P("1,1"), {}}, {P("1"), P("2,1"), {}}, {P("1"), P("1,1,1"), {}}, {{}, P("2,1,1"), {}}};
    std::vector<Partition> ws;
    for (auto& q : qs) ws.push_back(partition_from_quotient(blk, q));
    CHECK(llt_matrix(3, ws) == target_matrix(Target::ddagger));
}

TEST_CASE("weight-5 block with a long first row") {
    auto core = P("10,6,4,3,2,2,1,1,1,1");
    auto blk = make_block(5, core, 5);
    CHECK(runner_positions(core, 5) == std::vector<int>{0, 8, 12, 16, 24});
    // bead positions read off the four displays
    std::vector<std::vector<int>> beads = {{0, 1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 16, 29, 39},
                                           {0, 1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 19, 26, 39},
                                           {0, 1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 21, 24, 39},
                                           {0, 1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 16, 19, 24, 39}};
    std::vector<Partition> want;
    for (auto b : beads) want.push_back(partition_from_beta(b));
    for (auto& l : want) CHECK(in_block(l, blk));

    auto plans = select_witnesses(blk, 0);
    bool listed = std::any_of(plans.begin(), plans.end(), [&](const WitnessPlan& pl) { return pl.witnesses == want; });
    CHECK(listed);

    auto c = classify(engine(), blk, 0);
    CHECK(c.verdict == Verdict::schurian_infinite);
    REQUIRE(c.certificate.has_value());
    CHECK(c.certificate->target == Target::dagger);
    for (auto& t : c.certificate->trace)
        if (t.row != t.column && !t.steps.empty()) CHECK(t.steps[0].kind == "row_removal");
    CHECK(verify_certificate(engine(), *c.certificate).ok);
}

TEST_CASE("small verdicts") {
    auto& eng = engine();
    auto a = classify(eng, make_block(3, {}, 2), 0);
    CHECK(a.verdict == Verdict::schurian_infinite);
    REQUIRE(a.certificate.has_value());
    CHECK(a.certificate->target == Target::dagger);

    CHECK(classify(eng, make_block(4, P("2,2"), 1), 0).verdict == Verdict::schurian_finite);
    CHECK(classify(eng, make_block(3, P("4,2"), 0), 2).verdict == Verdict::schurian_finite);

    auto b = classify(eng, make_block(3, P("4,2"), 3), 2);
    CHECK(b.verdict == Verdict::schurian_infinite);
    REQUIRE(b.certificate.has_value());
    CHECK(b.certificate->target == Target::dagger2);

    auto x = classify(eng, make_block(3, P("3,1,1"), 2), 2);
    CHECK(x.verdict == Verdict::schurian_infinite);
    REQUIRE(x.certificate.has_value());
    CHECK(x.certificate->kind == CertKind::paper_external);
    CHECK_FALSE(x.certificate->citation.empty());

    CHECK(classify(eng, make_block(2, {}, 2), 3).verdict == Verdict::schurian_finite);
    CHECK(classify(eng, make_block(2, {}, 3), 2).verdict == Verdict::undetermined);
    CHECK_THROWS(classify(eng, make_block(3, {}, 2), -1));
}

TEST_CASE("certificates survive a JSON round trip") {
    auto& eng = engine();
    for (auto [core, w, p] : std::vector<std::tuple<Partition, int, int>>{{{}, 2, 0}, {P("4,2"), 3, 2}, {P("3,1,1"), 2, 2}, {P("2"), 2, 2}}) {
        auto c = classify(eng, make_block(3, core, w), p);
        REQUIRE(c.certificate.has_value());
        auto j = to_json(*c.certificate);
        auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
        CHECK(to_json(back) == j);
        auto vr = verify_certificate(eng, back);
        CHECK(vr.ok);
        CHECK(vr.external == (back.kind == CertKind::paper_external));
    }
}

TEST_CASE("tampered certificates are rejected") {
    auto& eng = engine();
    auto c = classify(eng, make_block(3, P("4,2"), 3), 2);
    REQUIRE(c.certificate.has_value());
    REQUIRE(verify_certificate(eng, *c.certificate).ok);

    auto bad_value = *c.certificate;
    bad_value.trace[1].value = bad_value.trace[1].value + 1;
    CHECK_FALSE(verify_certificate(eng, bad_value).ok);

    auto bad_target = *c.certificate;
    bad_target.target = bad_target.target == Target::dagger ? Target::ddagger : Target::dagger;
    CHECK_FALSE(verify_certificate(eng, bad_target).ok);

    auto swapped = *c.certificate;
    std::swap(swapped.witnesses[0], swapped.witnesses[1]);
    CHECK_FALSE(verify_certificate(eng, swapped).ok);

    auto no_evidence = *c.certificate;
    no_evidence.evidence.clear();
    CHECK_FALSE(verify_certificate(eng, no_evidence).ok);

    auto fake_external = *c.certificate;
    fake_external.kind = CertKind::paper_external;
    CHECK_FALSE(verify_certificate(eng, fake_external).ok);
}

TEST_CASE("replay rejects a forged step") {
    auto& eng = engine();
    auto t = trace_pair(eng, 5, P("25,13,7,3,2,2,1,1,1,1"), P("25,16,4,3,2,2,1,1,1,1"));
    REQUIRE_FALSE(t.steps.empty());
    std::string err;
    CHECK(replay_pair(eng, 5, t, err).has_value());
    auto forged = t;
    forged.steps[0].lambda = forged.steps[0].mu;
    CHECK_FALSE(replay_pair(eng, 5, forged, err).has_value());
    CHECK_FALSE(err.empty());
}

TEST_CASE("witness sanity checks") {
    auto blk = make_block(3, {}, 2);
    std::string err;
    CHECK(witnesses_well_formed(blk, {P("6"), P("5,1"), P("4,1,1"), P("3,2,1")}, err));
    CHECK_FALSE(witnesses_well_formed(blk, {P("6"), P("5,1"), P("4,1,1"), P("6")}, err));
    CHECK_FALSE(witnesses_well_formed(blk, {P("6"), P("5,1"), P("4,1,1"), P("2,2,2")}, err));
    CHECK_FALSE(witnesses_well_formed(blk, {P("6"), P("5,1"), P("4,1,1")}, err));
}
