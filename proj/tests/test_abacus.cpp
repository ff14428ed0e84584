#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecke/abacus.hpp>
#include <hecke/reductions.hpp>

using namespace hecke;

static Partition P(const char* s) { return parse_partition(s); }

TEST_CASE("beta numbers") {
    CHECK(beta_numbers(P("8,8,2,2,1"), 7) == std::vector<int>{14, 13, 6, 5, 3, 1, 0});
    CHECK(beta_numbers({}, 3) == std::vector<int>{2, 1, 0});
    CHECK(partition_from_beta({14, 13, 6, 5, 3, 1, 0}) == P("8,8,2,2,1"));
    CHECK_THROWS(beta_numbers(P("1,1,1"), 2));
}

TEST_CASE("cores and weights") {
    CHECK(e_core(P("6"), 3).empty());
    CHECK(weight(P("6"), 3) == 2);
    CHECK(e_core(P("10,2"), 4) == P("2,2"));
    CHECK(weight(P("10,2"), 4) == 2);
    CHECK(is_e_core(P("3,1,1"), 3));
    CHECK_FALSE(is_e_core(P("3"), 3));
    // core and weight do not depend on the number of beads
    for (int n = 0; n <= 9; ++n)
        for (auto& l : partitions_of(n)) {
            auto c = e_core(l, 4);
            for (int r = static_cast<int>(l.size()); r < static_cast<int>(l.size()) + 5; ++r)
                CHECK(core_from_counts(runner_counts(l, 4, r)) == c);
        }
}

TEST_CASE("quotients") {
    auto q = e_quotient(P("8,8,2,2,1"), 4);
    REQUIRE(q.size() == 4);
    CHECK(q == std::vector<Partition>{P("1"), P("2,1"), {}, {}});
    CHECK(weight(P("8,8,2,2,1"), 4) == 4);
    // core and quotient determine the partition
    for (auto& l : partitions_of(11)) {
        auto blk = block_of(l, 3);
        CHECK(partition_from_quotient(blk, e_quotient(l, 3)) == l);
    }
}

TEST_CASE("runner positions") {
    CHECK(runner_positions(P("10,6,4,3,2,2,1,1,1,1"), 5) == std::vector<int>{0, 8, 12, 16, 24});
    CHECK(runner_positions_infinite(P("2,2"), 4) == std::vector<int>{-6, -5, 0, 1});
    // runners_in_p_order lists runners by increasing position
    auto p = runner_positions(P("6,4,2,2,1,1"), 3);
    CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("pyramid bits") {
    auto py = pyramid(P("2,2"), 4);
    CHECK(py.bit(0, 1) == 1);
    CHECK(py.bit(0, 2) == 0);
    CHECK(py.bit(0, 3) == 0);
    CHECK(py.bit(1, 2) == 0);
    CHECK(py.bit(1, 3) == 0);
    CHECK(py.bit(2, 3) == 1);
    // below the diagonal and off the left edge
    CHECK(py.bit(2, 1) == 1);
    CHECK(py.bit(-1, 0) == 0);
}

TEST_CASE("angle labels in a weight-2 block") {
    auto blk = make_block(4, P("2,2"), 2);
    CHECK(angle_label(blk, "3") == P("10,2"));
    CHECK(angle_label(blk, "2") == P("9,3"));
    CHECK(angle_label(blk, "1") == P("4,3,3,1,1"));
    CHECK(angle_label(blk, "0") == P("3,3,3,1,1,1"));
    CHECK(angle_label(blk, "2,3") == P("6,6"));
    CHECK(angle_label(blk, "3^2") == P("6,3,3"));
    CHECK_THROWS(angle_label(blk, "4"));
}

TEST_CASE("block enumeration") {
    auto blk = make_block(3, {}, 2);
    CHECK(block_size(blk) == 9);
    auto ps = block_partitions(blk);
    CHECK(ps.size() == 9);
    for (auto& l : ps) CHECK(in_block(l, blk));
    CHECK(block_regular_partitions(blk).size() == 5);
    // blocks of weight w over e runners have as many partitions as e-multipartitions of w
    CHECK(block_size(make_block(4, P("2,2"), 3)) == multipartitions(4, 3).size());
    CHECK_THROWS(make_block(3, P("3"), 1));
}

TEST_CASE("Scopes triples of e = 3 cores") {
    CHECK(scopes_triple(P("6,4,2,2,1,1"), 3) == std::vector<int>{1, 3, 5});
    CHECK(scopes_triple({}, 2) == std::vector<int>{1, 1, 1});
    // weight-4 classes and their conjugates
    CHECK(conjugate_triple({1, 1, 3}, 4) == std::vector<int>{1, 3, 3});
    CHECK(conjugate_triple({1, 1, 4}, 4) == std::vector<int>{1, 4, 4});
    CHECK(conjugate_triple({1, 2, 4}, 4) == std::vector<int>{1, 3, 4});
    CHECK(conjugate_triple({1, 2, 5}, 4) == std::vector<int>{1, 4, 5});
    CHECK(conjugate_triple({1, 4, 1}, 4) == std::vector<int>{1, 4, 3});
    // [1,4,7] is the weight-4 Rouquier representative
    auto core = core_from_triple({1, 4, 7});
    CHECK(is_e_core(core, 3));
    CHECK(scopes_triple(core, 4) == std::vector<int>{1, 4, 7});
}

TEST_CASE("conjugate block") {
    auto b = conjugate_block(make_block(3, P("5,3,1,1"), 2));
    CHECK(b.core == P("4,2,2,1,1"));
    CHECK(b.w == 2);
}
