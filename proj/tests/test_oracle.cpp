#include "catch_amalgamated.hpp"
#include "support/naive.hpp"
#include "transversal/transversal.hpp"

using namespace transversal;
using transversal::testing::naive_count_transversals;
using transversal::testing::tiny1;

TEST_CASE("find_transversal_exact: TINY1 finds the unique transversal") {
    // all 4 assignments enumerated by hand: only (b, d) works
    const FindResult res = find_transversal_exact(tiny1());
    REQUIRE(res.status == FindResult::Status::found);
    CHECK(res.colouring.slot(0) == 1);
    CHECK(res.colouring.slot(1) == 1);
    CHECK(is_independent_transversal(tiny1(), res.colouring));
}

TEST_CASE("find_transversal_exact: none after exhaustion") {
    CoverInstance g({{"a"}, {"b"}}, {{0, 1, 1}}, {{{0, 0}, {1, 0}}});
    CHECK(find_transversal_exact(g).status == FindResult::Status::none);
}

TEST_CASE("find/count on a conflict-free instance") {
    CoverInstance g({{"a", "b"}, {"c", "d", "e"}}, {{0, 1, 1}}, {});
    CHECK(find_transversal_exact(g).status == FindResult::Status::found);
    CHECK(count_transversals(g).count == 6);
}

TEST_CASE("count_transversals: small exact values") {
    CHECK(count_transversals(tiny1()).count == 1);

    ListAssignment a;
    a.base.num_vertices = 2;
    a.base.edges = {{0, 1, 1}};
    a.lists = {{"1", "2"}, {"1", "2"}};
    CHECK(count_transversals(build_list_cover(a)).count == 2);

    CoverInstance single({{"a", "b", "c", "d"}}, {}, {});
    CHECK(count_transversals(single).count == 4);
}

TEST_CASE("count_transversals: complete on random small instances") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Rng meta(seed);
        const int parts = 2 + meta.uniform_int(7);  // up to 8
        const int list_size = 1 + meta.uniform_int(4);
        const CoverInstance g =
            gen_random_cover(parts, list_size, 0.3, 0.7, list_size, seed * 31 + 11);
        const CountResult res = count_transversals(g);
        REQUIRE(res.status == CountResult::Status::counted);
        CHECK(res.count == naive_count_transversals(g));
    }
}

TEST_CASE("forward-checking prune never changes the count") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng meta(seed + 999);
        const int parts = 2 + meta.uniform_int(5);
        const int list_size = 1 + meta.uniform_int(3);
        const CoverInstance g =
            gen_random_cover(parts, list_size, 0.4, 0.8, list_size, seed * 7 + 2);
        SearchBudget no_fc;
        no_fc.forward_checking = false;
        CHECK(count_transversals(g).count == count_transversals(g, no_fc).count);
    }
}

TEST_CASE("soundness: every found colouring verifies") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const CoverInstance g = gen_random_cover(6, 3, 0.45, 0.8, 3, seed + 321);
        const FindResult res = find_transversal_exact(g);
        if (res.status == FindResult::Status::found)
            CHECK(is_independent_transversal(g, res.colouring));
        else
            CHECK(naive_count_transversals(g) == 0);
    }
}

TEST_CASE("budget_exhausted distinguishes timeout from nonexistence") {
    const CoverInstance g = gen_random_cover(8, 4, 0.5, 1.0, 4, 5);
    SearchBudget tiny_budget;
    tiny_budget.max_nodes = 1;
    CHECK(count_transversals(g, tiny_budget).status == CountResult::Status::budget_exhausted);
    CHECK(find_transversal_exact(g, tiny_budget).status == FindResult::Status::budget_exhausted);
}
