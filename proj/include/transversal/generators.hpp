#ifndef TRANSVERSAL_GENERATORS_HPP
#define TRANSVERSAL_GENERATORS_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/reductions.hpp"
#include "transversal/rng.hpp"

namespace transversal {

namespace detail {
inline std::vector<std::vector<std::string>> numbered_lists(int parts, int list_size) {
    std::vector<std::vector<std::string>> out(parts);
    for (int v = 0; v < parts; ++v)
        for (int s = 0; s < list_size; ++s) out[v].push_back(std::to_string(s));
    return out;
}
}  // namespace detail

// Random cover: base pairs appear with base_density, every cross-list colour
// pair over a base edge becomes a conflict with edge_prob, then per-colour
// cross-multiplicities above the cap are thinned by uniformly random
// deletions (single ordered pass; removals only lower later counts).
// Draw order: base pairs (u<v ascending), then slot pairs per edge in slot
// order, then thinning in (colour id, neighbour part) order.
inline CoverInstance gen_random_cover(int parts, int list_size, double edge_prob,
                                      double base_density, int max_multiplicity_cap,
                                      std::uint64_t seed) {
    if (parts < 1 || list_size < 1)
        throw std::invalid_argument("gen_random_cover: need parts >= 1, list_size >= 1");
    if (max_multiplicity_cap < 1)
        throw std::invalid_argument("gen_random_cover: multiplicity cap must be >= 1");
    Rng rng(seed);
    std::vector<BaseEdge> base;
    for (int u = 0; u < parts; ++u)
        for (int v = u + 1; v < parts; ++v)
            if (rng.bernoulli(base_density)) base.push_back({u, v, 1});

    auto id = [&](int part, int slot) { return part * list_size + slot; };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(parts) * list_size);
    for (const auto& e : base)
        for (int su = 0; su < list_size; ++su)
            for (int sv = 0; sv < list_size; ++sv)
                if (rng.bernoulli(edge_prob)) {
                    adj[id(e.u, su)].push_back(id(e.v, sv));
                    adj[id(e.v, sv)].push_back(id(e.u, su));
                }

    for (int c = 0; c < parts * list_size; ++c) {
        // group partners by part; adjacency was built in ascending part order
        std::vector<std::vector<int>> groups;
        {
            std::vector<int> nb = adj[c];
            std::sort(nb.begin(), nb.end());
            for (std::size_t i = 0; i < nb.size();) {
                std::size_t j = i;
                while (j < nb.size() && nb[j] / list_size == nb[i] / list_size) ++j;
                groups.emplace_back(nb.begin() + i, nb.begin() + j);
                i = j;
            }
        }
        for (auto& grp : groups) {
            while (static_cast<int>(grp.size()) > max_multiplicity_cap) {
                const int pick = rng.uniform_int(static_cast<int>(grp.size()));
                const int other = grp[pick];
                grp.erase(grp.begin() + pick);
                auto erase_one = [](std::vector<int>& vec, int value) {
                    for (std::size_t i = 0; i < vec.size(); ++i)
                        if (vec[i] == value) {
                            vec.erase(vec.begin() + i);
                            return;
                        }
                };
                erase_one(adj[c], other);
                erase_one(adj[other], c);
            }
        }
    }

    std::vector<std::pair<ColourRef, ColourRef>> conflicts;
    for (int c = 0; c < parts * list_size; ++c)
        for (int o : adj[c])
            if (c < o)
                conflicts.push_back(
                    {{c / list_size, c % list_size}, {o / list_size, o % list_size}});
    return CoverInstance(detail::numbered_lists(parts, list_size), std::move(base), conflicts);
}

// Single-conflict cover over an explicit base multigraph: one uniform
// conflict pair per edge occurrence, resampled so parallel occurrences of a
// pair pick distinct conflicts. The identity sum_{c in L(v)} deg_H(c) =
// deg_G(v) (with multiplicity) is checked on every output.
inline CoverInstance gen_single_conflict(const MultigraphSpec& base, int list_size,
                                         std::uint64_t seed) {
    if (list_size < 1) throw std::invalid_argument("gen_single_conflict: list_size >= 1");
    const auto edges = detail::normalized_edges(base);
    Rng rng(seed);
    CorrespondenceAssignment a;
    a.base = base;
    a.lists = detail::numbered_lists(base.num_vertices, list_size);
    for (const auto& e : edges) {
        if (static_cast<long long>(e.multiplicity) >
            static_cast<long long>(list_size) * list_size)
            throw std::invalid_argument(
                "gen_single_conflict: multiplicity exceeds distinct conflict pairs");
        std::set<std::pair<int, int>> used;
        for (int occ = 0; occ < e.multiplicity; ++occ) {
            std::pair<int, int> pick;
            do {
                pick = {rng.uniform_int(list_size), rng.uniform_int(list_size)};
            } while (!used.insert(pick).second);
            a.matchings.push_back({e.u, e.v, {pick}});
        }
    }
    SingleConflictCover cover = build_single_conflict_cover(a);
    if (!cover.degree_identity_holds)
        throw std::logic_error("gen_single_conflict: degree identity failed");
    return std::move(cover.instance);
}

// Erdos-Gyarfas-Luczak family: n parts of size k, complete base graph, and
// at most one conflict between any two parts (present with pair_edge_prob,
// endpoints uniform). Always satisfies avg colour degree <= (n-1)/k.
inline CoverInstance gen_egl(int n, int k, double pair_edge_prob, std::uint64_t seed) {
    if (n < 2 || k < 1) throw std::invalid_argument("gen_egl: need n >= 2, k >= 1");
    Rng rng(seed);
    std::vector<BaseEdge> base;
    std::vector<std::pair<ColourRef, ColourRef>> conflicts;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            base.push_back({u, v, 1});
            if (rng.bernoulli(pair_edge_prob))
                conflicts.push_back({{u, rng.uniform_int(k)}, {v, rng.uniform_int(k)}});
        }
    CoverInstance g(detail::numbered_lists(n, k), std::move(base), conflicts);
    const InstanceStats s = stats(g);
    if (s.max_avg_colour_degree > Rational(n - 1, k))
        throw std::logic_error("gen_egl: structural degree bound violated");
    return g;
}

// Uniform random multigraph: edge_draws independent uniform pairs u < v,
// accumulated as multiplicities.
inline MultigraphSpec gen_random_multigraph(int num_vertices, long long edge_draws,
                                            std::uint64_t seed) {
    if (num_vertices < 2)
        throw std::invalid_argument("gen_random_multigraph: need >= 2 vertices");
    Rng rng(seed);
    std::map<std::pair<int, int>, int> mult;
    for (long long i = 0; i < edge_draws; ++i) {
        int u = rng.uniform_int(num_vertices);
        int v = rng.uniform_int(num_vertices - 1);
        if (v >= u) ++v;
        ++mult[std::minmax(u, v)];
    }
    MultigraphSpec spec;
    spec.num_vertices = num_vertices;
    for (const auto& [uv, m] : mult) spec.edges.push_back({uv.first, uv.second, m});
    return spec;
}

// Random list-assignment over a shared label palette; base is a random
// simple graph with the given density.
inline ListAssignment gen_random_list_assignment(int vertices, double density, int list_size,
                                                 int palette, std::uint64_t seed) {
    if (vertices < 1 || list_size < 1 || palette < list_size)
        throw std::invalid_argument("gen_random_list_assignment: bad parameters");
    Rng rng(seed);
    ListAssignment a;
    a.base.num_vertices = vertices;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v)
            if (rng.bernoulli(density)) a.base.edges.push_back({u, v, 1});
    a.lists.resize(vertices);
    for (int v = 0; v < vertices; ++v) {
        std::vector<int> pool(palette);
        for (int i = 0; i < palette; ++i) pool[i] = i;
        for (int i = 0; i < list_size; ++i) {
            const int pick = i + rng.uniform_int(palette - i);
            std::swap(pool[i], pool[pick]);
            a.lists[v].push_back(std::to_string(pool[i]));
        }
        std::sort(a.lists[v].begin(), a.lists[v].end());
    }
    return a;
}

}  // namespace transversal

#endif
