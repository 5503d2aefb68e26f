#ifndef TRANSVERSAL_REDUCTIONS_HPP
#define TRANSVERSAL_REDUCTIONS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "transversal/cover.hpp"

namespace transversal {

struct MultigraphSpec {
    int num_vertices = 0;
    std::vector<BaseEdge> edges;  // duplicates of the same pair are merged on use
};

struct ListAssignment {
    MultigraphSpec base;
    std::vector<std::vector<std::string>> lists;  // per vertex; a set of labels
};

// One matching per base-edge occurrence: for edge e = uv with multiplicity m,
// m EdgeMatching entries with matching orientation (u, v).
struct EdgeMatching {
    int u = 0;
    int v = 0;
    std::vector<std::pair<int, int>> pairs;  // (slot in L(u), slot in L(v))
};

struct CorrespondenceAssignment {
    MultigraphSpec base;
    std::vector<std::vector<std::string>> lists;
    std::vector<EdgeMatching> matchings;
};

namespace detail {

// merge duplicate pairs, summing multiplicity; reject loops and bad ranges
inline std::vector<BaseEdge> normalized_edges(const MultigraphSpec& base) {
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : base.edges) {
        if (e.u < 0 || e.u >= base.num_vertices || e.v < 0 || e.v >= base.num_vertices)
            throw std::invalid_argument("base edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("base graph must be loopless");
        if (e.multiplicity < 1) throw std::invalid_argument("base edge multiplicity < 1");
        mult[std::minmax(e.u, e.v)] += e.multiplicity;
    }
    std::vector<BaseEdge> out;
    out.reserve(mult.size());
    for (const auto& [uv, m] : mult) out.push_back({uv.first, uv.second, m});
    return out;
}

inline void check_lists(const std::vector<std::vector<std::string>>& lists, int num_vertices) {
    if (static_cast<int>(lists.size()) != num_vertices)
        throw std::invalid_argument("one list per base vertex required");
    for (std::size_t v = 0; v < lists.size(); ++v) {
        if (lists[v].empty())
            throw std::invalid_argument("empty list at vertex " + std::to_string(v));
        std::set<std::string> seen(lists[v].begin(), lists[v].end());
        if (seen.size() != lists[v].size())
            throw std::invalid_argument("duplicate label in list of vertex " + std::to_string(v));
    }
}

inline void check_matching(const EdgeMatching& m,
                           const std::vector<std::vector<std::string>>& lists) {
    std::set<int> left, right;
    for (const auto& [su, sv] : m.pairs) {
        if (su < 0 || su >= static_cast<int>(lists[m.u].size()) || sv < 0 ||
            sv >= static_cast<int>(lists[m.v].size()))
            throw std::invalid_argument("matching references out-of-range slot");
        if (!left.insert(su).second || !right.insert(sv).second)
            throw std::invalid_argument("matching repeats a slot on one side");
    }
}

// group matchings by unordered pair and check occurrence counts against base
inline std::map<std::pair<int, int>, std::vector<const EdgeMatching*>> grouped_matchings(
    const CorrespondenceAssignment& a, const std::vector<BaseEdge>& edges) {
    std::map<std::pair<int, int>, std::vector<const EdgeMatching*>> groups;
    for (const auto& m : a.matchings) {
        if (m.u < 0 || m.u >= a.base.num_vertices || m.v < 0 || m.v >= a.base.num_vertices)
            throw std::invalid_argument("matching endpoint out of range");
        check_matching(m, a.lists);
        groups[std::minmax(m.u, m.v)].push_back(&m);
    }
    std::map<std::pair<int, int>, int> mult;
    for (const auto& e : edges) mult[{e.u, e.v}] = e.multiplicity;
    for (const auto& [uv, ms] : groups) {
        auto it = mult.find(uv);
        if (it == mult.end())
            throw std::invalid_argument("matching given for non-edge (" +
                                        std::to_string(uv.first) + "," +
                                        std::to_string(uv.second) + ")");
        if (static_cast<int>(ms.size()) != it->second)
            throw std::invalid_argument("matching count differs from edge multiplicity at (" +
                                        std::to_string(uv.first) + "," +
                                        std::to_string(uv.second) + ")");
    }
    for (const auto& [uv, m] : mult)
        if (m > 0 && groups.find(uv) == groups.end()) groups[uv] = {};
    return groups;
}

}  // namespace detail

// H_ell: conflicts join equal labels on adjacent base vertices. Independent
// transversals of the result correspond to proper L-colourings of the base;
// multiplicity makes no difference and is collapsed.
inline CoverInstance build_list_cover(const ListAssignment& a) {
    auto edges = detail::normalized_edges(a.base);
    detail::check_lists(a.lists, a.base.num_vertices);
    std::vector<std::map<std::string, int>> slot_of(a.lists.size());
    for (std::size_t v = 0; v < a.lists.size(); ++v)
        for (std::size_t s = 0; s < a.lists[v].size(); ++s) slot_of[v][a.lists[v][s]] = static_cast<int>(s);

    std::vector<std::pair<ColourRef, ColourRef>> conflicts;
    for (auto& e : edges) {
        for (std::size_t su = 0; su < a.lists[e.u].size(); ++su) {
            auto it = slot_of[e.v].find(a.lists[e.u][su]);
            if (it != slot_of[e.v].end())
                conflicts.push_back({{e.u, static_cast<int>(su)}, {e.v, it->second}});
        }
        e.multiplicity = 1;  // H_ell is multiplicity-insensitive
    }
    return CoverInstance(a.lists, std::move(edges), conflicts);
}

// H_DP: conflicts are exactly the matched pairs; parallel edges contribute
// their own matchings, unioned as a simple graph.
inline CoverInstance build_dp_cover(const CorrespondenceAssignment& a) {
    auto edges = detail::normalized_edges(a.base);
    detail::check_lists(a.lists, a.base.num_vertices);
    auto groups = detail::grouped_matchings(a, edges);

    std::set<std::pair<ColourRef, ColourRef>> conflicts;
    for (const auto& [uv, ms] : groups)
        for (const EdgeMatching* m : ms)
            for (const auto& [su, sv] : m->pairs) {
                ColourRef cu{m->u, su}, cv{m->v, sv};
                conflicts.insert(cu < cv ? std::pair{cu, cv} : std::pair{cv, cu});
            }
    return CoverInstance(a.lists, std::move(edges),
                         std::vector<std::pair<ColourRef, ColourRef>>(conflicts.begin(),
                                                                      conflicts.end()));
}

struct SingleConflictCover {
    CoverInstance instance;
    std::vector<long long> colour_degree_sum;  // per vertex, sum of deg_H over its list
    std::vector<long long> base_degree;        // per vertex, deg_G with multiplicity
    bool degree_identity_holds = false;        // sum of deg_H over L(v) == deg_G(v) for all v
};

// Single-conflict cover: every matching has exactly one pair, and parallel
// occurrences of the same base pair must pick distinct pairs, so that
// |E_H(L(u), L(v))| equals the edge multiplicity.
inline SingleConflictCover build_single_conflict_cover(const CorrespondenceAssignment& a) {
    auto edges = detail::normalized_edges(a.base);
    detail::check_lists(a.lists, a.base.num_vertices);
    auto groups = detail::grouped_matchings(a, edges);

    std::vector<std::pair<ColourRef, ColourRef>> conflicts;
    for (const auto& [uv, ms] : groups) {
        std::set<std::pair<ColourRef, ColourRef>> seen;
        for (const EdgeMatching* m : ms) {
            if (m->pairs.size() != 1)
                throw std::invalid_argument("single-conflict matching must have exactly one pair");
            ColourRef cu{m->u, m->pairs[0].first}, cv{m->v, m->pairs[0].second};
            auto edge = cu < cv ? std::pair{cu, cv} : std::pair{cv, cu};
            if (!seen.insert(edge).second)
                throw std::invalid_argument(
                    "parallel occurrences of a base pair picked the same conflict");
            conflicts.push_back(edge);
        }
    }

    SingleConflictCover out{CoverInstance(a.lists, std::move(edges), conflicts), {}, {}, false};
    const CoverInstance& g = out.instance;
    out.colour_degree_sum.resize(g.num_parts());
    out.base_degree.resize(g.num_parts());
    out.degree_identity_holds = true;
    for (int v = 0; v < g.num_parts(); ++v) {
        out.colour_degree_sum[v] = g.degree_sum(v);
        out.base_degree[v] = g.base_degree(v);
        if (out.colour_degree_sum[v] != out.base_degree[v]) out.degree_identity_holds = false;
    }
    return out;
}

// True iff every pairing matches equal labels (compared as strings, not slots).
inline bool check_adaptable(const CorrespondenceAssignment& a) {
    detail::check_lists(a.lists, a.base.num_vertices);
    for (const auto& m : a.matchings) {
        detail::check_matching(m, a.lists);
        for (const auto& [su, sv] : m.pairs)
            if (a.lists[m.u][su] != a.lists[m.v][sv]) return false;
    }
    return true;
}

}  // namespace transversal

#endif
