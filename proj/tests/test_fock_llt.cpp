#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <hecke/fock.hpp>
#include <hecke/targets.hpp>

using namespace hecke;

static Partition P(const char* s) { return parse_partition(s); }
static const LaurentPoly v = LaurentPoly::v();

static FockVector vac() { return {{Partition{}, LaurentPoly(1)}}; }

TEST_CASE("single inductions from the vacuum") {
    auto x = f_induct(0, vac(), 3);
    CHECK(x == FockVector{{P("1"), 1}});
    CHECK(f_induct(1, vac(), 3).empty());

    // two ways to add a 2-node to (2): the lower one sees an addable node above it
    auto y = f_induct(2, f_induct(1, x, 3), 3);
    CHECK(y.size() == 2);
    CHECK(fock_coeff(y, P("3")) == 1);
    CHECK(fock_coeff(y, P("2,1")) == v);
}

TEST_CASE("divided powers") {
    auto y = f_divided(2, 2, {{P("2"), 1}}, 3);
    CHECK(y == FockVector{{P("3,1"), 1}});
    // f^(k) = f^k / [k]! on random small vectors
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto ps = partitions_of(n);
        Partition l = ps[rng() % ps.size()];
        int i = static_cast<int>(rng() % 3), k = 1 + static_cast<int>(rng() % 3);
        FockVector x{{l, 1}};
        CAPTURE(to_string(l));
        CHECK(f_divided(i, k, x, 3) == f_divided_by_steps(i, k, x, 3));
    }
}

TEST_CASE("ladder words") {
    auto w = ladder_word(P("2"), 3);
    REQUIRE(w.size() == 2);
    CHECK(w[0].residue == 0);
    CHECK(w[1].residue == 1);
    // every ladder word yields a vector with mu on top, coefficient 1
    for (auto& mu : partitions_of(8)) {
        if (!is_e_regular(mu, 3)) continue;
        FockVector x = vac();
        for (auto s : ladder_word(mu, 3)) x = f_divided(s.residue, s.multiplicity, x, 3);
        CAPTURE(to_string(mu));
        CHECK(fock_coeff(x, mu) == 1);
        for (auto& [l, c] : x) CHECK(dominates(mu, l));
    }
    CHECK_THROWS(ladder_word(P("1,1,1"), 3));
}

TEST_CASE("canonical basis column of (6) at e = 3") {
    LLT llt(3);
    auto& g = llt.column(P("6"));
    CHECK(fock_coeff(g, P("6")) == 1);
    CHECK(fock_coeff(g, P("5,1")) == v);
    CHECK(fock_coeff(g, P("4,1,1")).is_zero());
    CHECK(fock_coeff(g, P("3,2,1")) == v);
    for (auto& [l, c] : g)
        if (l != P("6")) CHECK(c.in_vN());
}

TEST_CASE("principal block of size 6 gives the first target") {
    LLT llt(3);
    std::vector<Partition> ps{P("6"), P("5,1"), P("4,1,1"), P("3,2,1")};
    PolyMatrix m(4, std::vector<LaurentPoly>(4));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = llt.d(ps[r], ps[c]);
    CHECK(m == target_matrix(Target::dagger));
}

TEST_CASE("column of (9,1,1) in the block of core (3,1,1)") {
    LLT llt(3);
    CHECK(llt.d(P("6,3,2"), P("9,1,1")) == v);
    CHECK(llt.d(P("3,3,2,2,1"), P("9,1,1")) == v * v);
    // lowest row of a column is the conjugate Mullineux image, with entry v^w
    Partition low = conjugate(mullineux(P("9,1,1"), 3));
    CHECK(low == P("3,3,2,2,1"));
}

TEST_CASE("block matrices pass the degree check") {
    LLT llt(3);
    for (auto core : {Partition{}, P("1"), P("2"), P("1,1"), P("3,1,1")})
        for (int w = 0; w <= 3; ++w) {
            auto m = graded_decomp_matrix_char0(make_block(3, core, w), llt);
            CAPTURE(to_string(m.block));
            CHECK(degree_check(m).empty());
        }
    LLT llt4(4);
    CHECK(degree_check(graded_decomp_matrix_char0(make_block(4, P("2,2"), 3), llt4)).empty());
}

TEST_CASE("budget guard") {
    LLT llt(3, 5); // the block has 9 partitions
    CHECK_THROWS_AS(llt.column(P("9,1,1")), BudgetExceeded);
    CHECK_THROWS(LLT(2));
}
