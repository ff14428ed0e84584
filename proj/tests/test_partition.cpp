#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecke/abacus.hpp>
#include <hecke/partition.hpp>

using namespace hecke;

static Partition P(const char* s) { return parse_partition(s); }

TEST_CASE("parsing accepts exponents and rejects junk") {
    CHECK(P("5,3,1^2") == Partition{5, 3, 1, 1});
    CHECK(P("3^2,2^0,1") == Partition{3, 3, 1});
    CHECK(P("-").empty());
    CHECK(P("4,0,0") == Partition{4});
    CHECK_THROWS(P("3,x"));
    CHECK_THROWS(P("3,,1"));
    CHECK_THROWS(make_partition({1, 3}));
    CHECK(to_string(P("5,3,1,1")) == "5,3,1^2");
}

TEST_CASE("conjugation") {
    CHECK(conjugate(P("5,3,1,1")) == P("4,2,2,1,1"));
    CHECK(conjugate(Partition{}).empty());
    CHECK(conjugate(P("3,1,1")) == P("3,1,1"));
    for (int n = 0; n <= 10; ++n)
        for (auto& l : partitions_of(n)) CHECK(conjugate(conjugate(l)) == l);
}

TEST_CASE("dominance order") {
    CHECK(dominates(P("6"), P("5,1")));
    CHECK_FALSE(dominates(P("5,1"), P("6")));
    CHECK_FALSE(dominates(P("3,3"), P("4,1,1")));
    CHECK_FALSE(dominates(P("4,1,1"), P("3,3")));
    CHECK(dominates(P("3,2,1"), P("3,2,1")));
    // conjugation reverses dominance
    for (auto& a : partitions_of(7))
        for (auto& b : partitions_of(7))
            if (dominates(a, b)) CHECK(dominates(conjugate(b), conjugate(a)));
}

TEST_CASE("e-regularity") {
    CHECK(is_e_regular(P("5,1,1"), 3));
    CHECK_FALSE(is_e_regular(P("4,1,1,1"), 3));
    CHECK(is_e_regular(Partition{}, 3));
    CHECK(is_e_regular(P("4,1,1,1"), 4));
}

TEST_CASE("addable and removable nodes by residue") {
    auto b = boundary_nodes(P("6,4,3,1,1"), 4, 2);
    CHECK(std::find(b.addable.begin(), b.addable.end(), Node{1, 7}) != b.addable.end());
    CHECK(b.removable == std::vector<Node>{{2, 4}});
    // (3,3) is removable but carries residue 0
    auto b0 = boundary_nodes(P("6,4,3,1,1"), 4, 0);
    CHECK(std::find(b0.removable.begin(), b0.removable.end(), Node{3, 3}) != b0.removable.end());
    for (auto& n : b.addable) CHECK(residue(n, 4) == 2);
    for (auto& n : b.removable) CHECK(residue(n, 4) == 2);

    auto z = boundary_nodes({}, 3, 0);
    REQUIRE(z.addable.size() == 1);
    CHECK(z.addable[0] == Node{1, 1});
    CHECK(z.removable.empty());

    auto t = boundary_nodes(P("2"), 3, 2);
    CHECK(t.addable == std::vector<Node>{{1, 3}, {2, 1}});
    CHECK(t.removable.empty());
}

TEST_CASE("node insertion and deletion") {
    CHECK(add_node(P("2"), {2, 1}) == P("2,1"));
    CHECK(remove_node(P("2,1"), {1, 2}) == P("1,1"));
    CHECK_THROWS(add_node(P("2"), {2, 2}));
    CHECK_THROWS(remove_node(P("2,1"), {1, 1}));
}

TEST_CASE("Kashiwara operators on maximal powers") {
    CHECK(kashiwara(P("2"), 3, 2, 2, Kashiwara::lower) == P("3,1"));
    CHECK(kashiwara(P("1,1"), 3, 1, 2, Kashiwara::lower) == P("2,1,1"));
    CHECK(kashiwara(P("3,1"), 3, 2, 2, Kashiwara::raise) == P("2"));
    CHECK(kashiwara(P("5,2"), 3, 1, 0, Kashiwara::lower) == P("5,2"));
    // (2) at e = 3 has only two addable 2-nodes
    CHECK_FALSE(kashiwara(P("2"), 3, 2, 3, Kashiwara::lower).has_value());
}

TEST_CASE("good node sequences") {
    CHECK(good_node_sequence(P("2"), 3) == std::vector<int>{1, 0});
    // removing good nodes in order empties the partition
    for (auto& l : partitions_of(8)) {
        if (!is_e_regular(l, 3)) continue;
        Partition x = l;
        for (int i : good_node_sequence(l, 3)) x = *kashiwara(x, 3, i, 1, Kashiwara::raise);
        CHECK(x.empty());
    }
}

TEST_CASE("Mullineux map") {
    CHECK(mullineux(P("9,1,1"), 3) == P("5,4,2"));
    CHECK(mullineux(P("5,4,2"), 3) == P("9,1,1"));
    CHECK(mullineux(P("6,3,2"), 3) == P("6,3,2"));
    CHECK(mullineux(P("6,4,1"), 3) == P("3,3,2,2,1"));
    // on e-cores it is conjugation
    CHECK(mullineux(P("3,1,1"), 3) == P("3,1,1"));
    CHECK(mullineux(P("4,2"), 3) == P("2,2,1,1"));
    CHECK_THROWS(mullineux(P("1,1,1"), 3));
}

TEST_CASE("empty dominance intervals") {
    auto blk = make_block(3, {}, 2);
    CHECK_FALSE(dominance_interval_empty(P("3,2,1"), P("6"), blk));
    CHECK(dominance_interval_empty(P("5,1"), P("6"), blk));
}

TEST_CASE("partition counts") {
    std::vector<size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p[n]);
}
