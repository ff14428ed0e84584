#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hecke/acceptance.hpp>

using namespace hecke;
namespace props = hecke::acceptance::props;

static Engine& engine() {
    static Engine eng;
    return eng;
}

static void expect_clean(const props::Violations& v) {
    for (auto& s : v) FAIL_CHECK(s);
}

TEST_CASE("degree bounds and unitriangularity on every small block") {
    size_t blocks = 0;
    expect_clean(props::degree_bounds(engine(), {{3, 15}, {4, 13}, {5, 12}}, &blocks));
    CHECK(blocks > 100);
}

TEST_CASE("Mullineux is an involution on regular partitions") { expect_clean(props::mullineux_involution(12)); }

TEST_CASE("runner removal equality on random instances") {
    int found = 0;
    expect_clean(props::runner_removal_equality(engine(), 20, 99, &found));
    CHECK(found == 20);
}

TEST_CASE("row removal product law") {
    size_t pairs = 0;
    expect_clean(props::row_removal_product(engine(), 15, &pairs));
    CHECK(pairs > 100);
}

TEST_CASE("Scopes moves keep decomposition numbers") { expect_clean(props::scopes_invariance(engine(), 10, 1)); }

TEST_CASE("core chains follow maximal Kashiwara powers") { expect_clean(props::kashiwara_chains(2)); }
