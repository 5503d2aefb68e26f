#include "catch_amalgamated.hpp"
#include "support/naive.hpp"
#include "transversal/transversal.hpp"

using namespace transversal;
using transversal::testing::naive_count_list_colourings;

namespace {

ListAssignment k2(std::vector<std::string> lu, std::vector<std::string> lv) {
    ListAssignment a;
    a.base.num_vertices = 2;
    a.base.edges = {{0, 1, 1}};
    a.lists = {std::move(lu), std::move(lv)};
    return a;
}

}  // namespace

TEST_CASE("build_list_cover: K2 with shared lists") {
    const CoverInstance g = build_list_cover(k2({"1", "2"}, {"1", "2"}));
    REQUIRE(g.conflict_edges().size() == 2);
    CHECK(g.colour_ref(g.conflict_edges()[0].first) == ColourRef{0, 0});
    CHECK(g.colour_ref(g.conflict_edges()[0].second) == ColourRef{1, 0});
    CHECK(g.colour_ref(g.conflict_edges()[1].first) == ColourRef{0, 1});
    CHECK(g.colour_ref(g.conflict_edges()[1].second) == ColourRef{1, 1});
    CHECK(stats(g).max_colour_multiplicity == 1);
}

TEST_CASE("build_list_cover: disjoint lists give no conflicts") {
    const CoverInstance g = build_list_cover(k2({"1", "2"}, {"3", "4"}));
    CHECK(g.conflict_edges().empty());
}

TEST_CASE("build_list_cover: path with 3 shared colours has 12 transversals") {
    // brute force over 27 label assignments gives 3 * 2 * 2 = 12
    ListAssignment a;
    a.base.num_vertices = 3;
    a.base.edges = {{0, 1, 1}, {1, 2, 1}};
    a.lists = {{"1", "2", "3"}, {"1", "2", "3"}, {"1", "2", "3"}};
    REQUIRE(naive_count_list_colourings(a) == 12);
    const CoverInstance g = build_list_cover(a);
    CHECK(count_transversals(g).count == 12);
}

TEST_CASE("build_list_cover: multigraph multiplicity is collapsed") {
    ListAssignment a = k2({"1"}, {"1"});
    a.base.edges = {{0, 1, 3}};
    const CoverInstance g = build_list_cover(a);
    CHECK(g.conflict_edges().size() == 1);
    CHECK(g.base_edges()[0].multiplicity == 1);
}

TEST_CASE("bijection: proper list-colouring count equals transversal count") {
    long long checked = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng meta(seed);
        const int n = 2 + meta.uniform_int(3);  // up to 4 vertices
        const int list_size = 1 + meta.uniform_int(3);
        const ListAssignment a =
            gen_random_list_assignment(n, 0.7, list_size, list_size + 2, seed * 13 + 1);
        const CoverInstance g = build_list_cover(a);
        REQUIRE(validate(g).empty());
        CHECK(count_transversals(g).count == naive_count_list_colourings(a));
        ++checked;
    }
    REQUIRE(checked == 60);
}

TEST_CASE("mu of a list cover never exceeds 1") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const ListAssignment a = gen_random_list_assignment(5, 0.6, 3, 5, seed + 500);
        CHECK(stats(build_list_cover(a)).max_colour_multiplicity <= 1);
    }
}

TEST_CASE("build_dp_cover: identity matchings recognise the colours") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ListAssignment la = gen_random_list_assignment(4, 0.8, 3, 5, seed + 90);
        CorrespondenceAssignment ca;
        ca.base = la.base;
        ca.lists = la.lists;
        for (const auto& e : la.base.edges) {
            EdgeMatching m{e.u, e.v, {}};
            for (std::size_t su = 0; su < la.lists[e.u].size(); ++su)
                for (std::size_t sv = 0; sv < la.lists[e.v].size(); ++sv)
                    if (la.lists[e.u][su] == la.lists[e.v][sv])
                        m.pairs.push_back({static_cast<int>(su), static_cast<int>(sv)});
            ca.matchings.push_back(std::move(m));
        }
        CHECK(canonical_text(build_dp_cover(ca)) == canonical_text(build_list_cover(la)));
        CHECK(check_adaptable(ca));
    }
}

TEST_CASE("build_dp_cover: crossed matching") {
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 2;
    ca.base.edges = {{0, 1, 1}};
    ca.lists = {{"1", "2"}, {"1", "2"}};
    ca.matchings = {{0, 1, {{0, 1}, {1, 0}}}};
    const CoverInstance g = build_dp_cover(ca);
    REQUIRE(g.conflict_edges().size() == 2);
    CHECK(g.colour_ref(g.conflict_edges()[0].first) == ColourRef{0, 0});
    CHECK(g.colour_ref(g.conflict_edges()[0].second) == ColourRef{1, 1});
    CHECK(g.colour_ref(g.conflict_edges()[1].first) == ColourRef{0, 1});
    CHECK(g.colour_ref(g.conflict_edges()[1].second) == ColourRef{1, 0});
}

TEST_CASE("build_dp_cover: parallel edges raise multiplicity") {
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 2;
    ca.base.edges = {{0, 1, 2}};
    ca.lists = {{"1", "2"}, {"1", "2"}};
    ca.matchings = {{0, 1, {{0, 0}}}, {0, 1, {{0, 1}}}};
    const CoverInstance g = build_dp_cover(ca);
    CHECK(g.conflict_edges().size() == 2);
    CHECK(g.degree(g.colour_id({0, 0})) == 2);
    CHECK(stats(g).max_colour_multiplicity == 2);
}

TEST_CASE("build_dp_cover: out-of-range and non-matching pairings rejected") {
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 2;
    ca.base.edges = {{0, 1, 1}};
    ca.lists = {{"1", "2"}, {"1", "2"}};
    ca.matchings = {{0, 1, {{0, 5}}}};
    CHECK_THROWS_AS(build_dp_cover(ca), std::invalid_argument);
    ca.matchings = {{0, 1, {{0, 0}, {0, 1}}}};  // slot 0 repeated on the left
    CHECK_THROWS_AS(build_dp_cover(ca), std::invalid_argument);
}

TEST_CASE("build_single_conflict_cover: one conflict per edge occurrence") {
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 3;
    ca.base.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    ca.lists = {{"1", "2"}, {"1", "2"}, {"1", "2"}};
    ca.matchings = {{0, 1, {{0, 0}}}, {1, 2, {{1, 0}}}, {0, 2, {{1, 1}}}};
    const SingleConflictCover out = build_single_conflict_cover(ca);
    CHECK(out.instance.conflict_edges().size() == 3);
    CHECK(out.degree_identity_holds);
}

TEST_CASE("build_single_conflict_cover: regular base gives average degree k/s") {
    // C4 is 2-regular; lists of size 2 give per-part average exactly 1
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 4;
    ca.base.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
    ca.lists = {{"1", "2"}, {"1", "2"}, {"1", "2"}, {"1", "2"}};
    ca.matchings = {{0, 1, {{0, 1}}}, {1, 2, {{0, 0}}}, {2, 3, {{1, 1}}}, {0, 3, {{0, 0}}}};
    const SingleConflictCover out = build_single_conflict_cover(ca);
    for (int v = 0; v < 4; ++v) CHECK(out.colour_degree_sum[v] == 2);
    CHECK(stats(out.instance).max_avg_colour_degree == Rational(2, 2));
}

TEST_CASE("build_single_conflict_cover: oversized matchings rejected") {
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 2;
    ca.base.edges = {{0, 1, 1}};
    ca.lists = {{"1", "2"}, {"1", "2"}};
    ca.matchings = {{0, 1, {{0, 0}, {1, 1}}}};
    CHECK_THROWS_AS(build_single_conflict_cover(ca), std::invalid_argument);
}

TEST_CASE("single-conflict cover: cross-list edge count equals base multiplicity") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const MultigraphSpec base = gen_random_multigraph(6, 20, seed + 3);
        const CoverInstance g = gen_single_conflict(base, 3, seed + 4);
        std::map<std::pair<int, int>, int> count;
        for (const auto& [a, b] : g.conflict_edges())
            ++count[std::minmax(g.part_of(a), g.part_of(b))];
        for (const auto& e : g.base_edges()) CHECK(count[{e.u, e.v}] == e.multiplicity);
    }
}

TEST_CASE("check_adaptable") {
    CorrespondenceAssignment ca;
    ca.base.num_vertices = 2;
    ca.base.edges = {{0, 1, 1}};

    SECTION("identity matchings on shared labels") {
        ca.lists = {{"1", "2"}, {"1", "2"}};
        ca.matchings = {{0, 1, {{0, 0}, {1, 1}}}};
        CHECK(check_adaptable(ca));
    }
    SECTION("crossed matching over distinct labels") {
        ca.lists = {{"1", "2"}, {"1", "2"}};
        ca.matchings = {{0, 1, {{0, 1}}}};  // pairs "1" with "2"
        CHECK_FALSE(check_adaptable(ca));
    }
    SECTION("crossed slots but equal labels: labels decide, not slots") {
        ca.lists = {{"x", "y"}, {"y", "x"}};
        ca.matchings = {{0, 1, {{0, 1}, {1, 0}}}};  // x-x and y-y at crossed slots
        CHECK(check_adaptable(ca));
    }
}
