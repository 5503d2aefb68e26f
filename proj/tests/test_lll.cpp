#include <set>

#include "catch_amalgamated.hpp"
#include "support/naive.hpp"
#include "transversal/transversal.hpp"

using namespace transversal;
using transversal::testing::tiny1;

TEST_CASE("finish: conflict-free succeeds on the initial sample") {
    CoverInstance g({{"a", "b"}, {"c", "d", "e"}, {"f"}}, {{0, 1, 1}, {1, 2, 1}}, {});
    FinisherParams params;
    params.seed = 42;
    const FinisherResult res = finish(g, params);
    REQUIRE(res.status == FinisherResult::Status::found);
    CHECK(res.resamples == 0);
    CHECK(is_independent_transversal(g, res.colouring));
}

TEST_CASE("finish: TINY1 seed sweep always lands on the unique transversal") {
    const CoverInstance g = tiny1();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        FinisherParams params;
        params.seed = seed;
        params.max_resamples = 100000;
        const FinisherResult res = finish(g, params);
        REQUIRE(res.status == FinisherResult::Status::found);
        CHECK(res.colouring.slot(0) == 1);
        CHECK(res.colouring.slot(1) == 1);
    }
}

TEST_CASE("finish: precondition enforcement") {
    FinisherParams params;
    params.enforce_precondition = true;
    // TINY1 has min list 2 < 4 * (3/2)
    CHECK_THROWS_AS(finish(tiny1(), params), std::invalid_argument);

    // generous lists pass the gate; scan for a seed meeting the precondition
    bool found_instance = false;
    CoverInstance g;
    for (std::uint64_t seed = 7; seed < 40 && !found_instance; ++seed) {
        g = gen_random_cover(8, 12, 0.03, 0.5, 2, seed);
        const InstanceStats s = stats(g);
        found_instance = static_cast<double>(s.min_list_size) >=
                         4.0 * to_double(s.max_avg_colour_degree);
    }
    REQUIRE(found_instance);
    params.seed = 3;
    CHECK(finish(g, params).status == FinisherResult::Status::found);
}

TEST_CASE("finish: seeded runs on generous instances all verify") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CoverInstance g = gen_random_cover(12, 16, 0.04, 0.7, 2, seed + 50);
        FinisherParams params;
        params.seed = seed * 17 + 1;
        const FinisherResult res = finish(g, params);
        REQUIRE(res.status == FinisherResult::Status::found);
        CHECK(is_independent_transversal(g, res.colouring));
    }
}

TEST_CASE("finish: each step resamples exactly the two endpoint parts") {
    const CoverInstance g = gen_random_cover(6, 3, 0.5, 0.9, 3, 11);
    FinisherParams params;
    params.seed = 2;
    params.max_resamples = 200000;
    long long steps = 0;
    const FinisherResult res = finish(g, params, [&](std::pair<int, int> edge,
                                                     const std::vector<int>& before,
                                                     const std::vector<int>& after) {
        ++steps;
        const int pu = g.part_of(edge.first), pv = g.part_of(edge.second);
        for (int v = 0; v < g.num_parts(); ++v)
            if (v != pu && v != pv) CHECK(before[v] == after[v]);

        // the selected edge is the lexicographically least violated one in
        // the pre-step state
        std::set<std::pair<int, int>> violated;
        for (int v = 0; v < g.num_parts(); ++v) {
            const int id = g.colour_id({v, before[v]});
            for (int nb : g.neighbours(id))
                if (g.colour_id({g.part_of(nb), before[g.part_of(nb)]}) == nb)
                    violated.insert(std::minmax(id, nb));
        }
        REQUIRE_FALSE(violated.empty());
        CHECK(*violated.begin() == edge);
    });
    REQUIRE(res.status == FinisherResult::Status::found);
    CHECK(res.resamples == steps);
}

TEST_CASE("finish: resample_limit reported when stuck") {
    // two singleton lists joined by a conflict: no transversal exists
    CoverInstance g({{"a"}, {"b"}}, {{0, 1, 1}}, {{{0, 0}, {1, 0}}});
    FinisherParams params;
    params.seed = 0;
    params.max_resamples = 50;
    const FinisherResult res = finish(g, params);
    CHECK(res.status == FinisherResult::Status::resample_limit);
    CHECK(res.resamples == 50);
}
