#ifndef TRANSVERSAL_COVER_HPP
#define TRANSVERSAL_COVER_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "transversal/rational.hpp"

namespace transversal {

// A colour is identified positionally by (part, slot). Labels are carried
// only for I/O and the list-colouring reduction.
struct ColourRef {
    int part = 0;
    int slot = 0;
    friend auto operator<=>(const ColourRef&, const ColourRef&) = default;
};

struct BaseEdge {
    int u = 0;
    int v = 0;
    int multiplicity = 1;
};

struct Violation {
    std::string rule;    // stable identifier, e.g. "intra-part-edge"
    std::string detail;  // offending indices, human-readable
};

// Partial assignment of one colour slot per part; -1 means uncoloured.
class PartialColouring {
public:
    PartialColouring() = default;
    explicit PartialColouring(int num_parts) : slot_(num_parts, -1) {}

    int num_parts() const { return static_cast<int>(slot_.size()); }
    bool is_assigned(int part) const { return slot_[part] >= 0; }
    int slot(int part) const { return slot_[part]; }
    ColourRef colour(int part) const { return {part, slot_[part]}; }

    void assign(int part, int slot) {
        if (slot < 0) throw std::invalid_argument("PartialColouring: negative slot");
        slot_[part] = slot;
    }
    void unassign(int part) { slot_[part] = -1; }

    int assigned_count() const {
        int n = 0;
        for (int s : slot_) n += (s >= 0);
        return n;
    }
    bool is_total() const { return assigned_count() == num_parts(); }

    std::vector<int> assigned_parts() const {
        std::vector<int> out;
        for (int v = 0; v < num_parts(); ++v)
            if (slot_[v] >= 0) out.push_back(v);
        return out;
    }

    friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

private:
    std::vector<int> slot_;
};

// Vertex-partitioned conflict graph over a base multigraph: parts carry
// ordered colour lists, conflict edges join colours of distinct parts, and
// every conflict lies over a base edge. Immutable after construction; all
// mutating operations return new values.
class CoverInstance {
public:
    CoverInstance() = default;

    CoverInstance(std::vector<std::vector<std::string>> parts,
                  std::vector<BaseEdge> base_edges,
                  const std::vector<std::pair<ColourRef, ColourRef>>& conflict_pairs)
        : parts_(std::move(parts)), base_edges_(std::move(base_edges)) {
        const int n = num_parts();
        offsets_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v)
            offsets_[v + 1] = offsets_[v] + static_cast<int>(parts_[v].size());
        const int m = offsets_[n];
        part_of_.resize(m);
        for (int v = 0; v < n; ++v)
            for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) part_of_[i] = v;

        base_nbrs_.assign(n, {});
        base_deg_.assign(n, 0);
        for (auto& e : base_edges_) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::invalid_argument("CoverInstance: base edge endpoint out of range");
            if (e.multiplicity < 1)
                throw std::invalid_argument("CoverInstance: base edge multiplicity < 1");
            if (e.v < e.u) std::swap(e.u, e.v);
        }
        std::sort(base_edges_.begin(), base_edges_.end(),
                  [](const BaseEdge& a, const BaseEdge& b) {
                      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                  });
        for (const auto& e : base_edges_) {
            base_deg_[e.u] += e.multiplicity;
            base_deg_[e.v] += e.multiplicity;
            if (e.u != e.v) {
                base_nbrs_[e.u].push_back(e.v);
                base_nbrs_[e.v].push_back(e.u);
            }
        }
        for (auto& nb : base_nbrs_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }

        conflict_edges_.reserve(conflict_pairs.size());
        for (const auto& [a, b] : conflict_pairs) {
            if (!ref_in_range(a) || !ref_in_range(b))
                throw std::invalid_argument("CoverInstance: conflict colour out of range");
            int ia = colour_id(a), ib = colour_id(b);
            if (ib < ia) std::swap(ia, ib);
            conflict_edges_.emplace_back(ia, ib);
        }
        std::sort(conflict_edges_.begin(), conflict_edges_.end());
        adj_.assign(m, {});
        for (const auto& [ia, ib] : conflict_edges_) {
            adj_[ia].push_back(ib);
            if (ib != ia) adj_[ib].push_back(ia);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int num_parts() const { return static_cast<int>(parts_.size()); }
    int list_size(int part) const { return static_cast<int>(parts_[part].size()); }
    const std::vector<std::string>& labels(int part) const { return parts_[part]; }
    const std::string& label(ColourRef c) const { return parts_[c.part][c.slot]; }
    const std::vector<std::vector<std::string>>& parts() const { return parts_; }

    int num_colours() const { return offsets_.empty() ? 0 : offsets_.back(); }
    int colour_id(ColourRef c) const { return offsets_[c.part] + c.slot; }
    int part_of(int id) const { return part_of_[id]; }
    ColourRef colour_ref(int id) const {
        const int v = part_of_[id];
        return {v, id - offsets_[v]};
    }

    int min_list_size() const {
        int m = std::numeric_limits<int>::max();
        for (int v = 0; v < num_parts(); ++v) m = std::min(m, list_size(v));
        return num_parts() == 0 ? 0 : m;
    }
    int max_list_size() const {
        int m = 0;
        for (int v = 0; v < num_parts(); ++v) m = std::max(m, list_size(v));
        return m;
    }

    const std::vector<int>& neighbours(int colour_id) const { return adj_[colour_id]; }
    int degree(int colour_id) const { return static_cast<int>(adj_[colour_id].size()); }
    long long degree_sum(int part) const {
        long long s = 0;
        for (int i = offsets_[part]; i < offsets_[part + 1]; ++i) s += degree(i);
        return s;
    }
    // canonical (a < b), lexicographically sorted
    const std::vector<std::pair<int, int>>& conflict_edges() const { return conflict_edges_; }

    const std::vector<BaseEdge>& base_edges() const { return base_edges_; }
    bool base_adjacent(int u, int v) const {
        const auto& nb = base_nbrs_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    const std::vector<int>& base_neighbours(int part) const { return base_nbrs_[part]; }
    long long base_degree(int part) const { return base_deg_[part]; }

private:
    bool ref_in_range(ColourRef c) const {
        return c.part >= 0 && c.part < num_parts() && c.slot >= 0 && c.slot < list_size(c.part);
    }

    std::vector<std::vector<std::string>> parts_;
    std::vector<BaseEdge> base_edges_;
    std::vector<int> offsets_;
    std::vector<int> part_of_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> conflict_edges_;
    std::vector<std::vector<int>> base_nbrs_;  // simple adjacency, multiplicity ignored
    std::vector<long long> base_deg_;          // counts multiplicity
};

struct InstanceStats {
    int max_degree = 0;                       // Delta(H)
    Rational max_avg_colour_degree{0};        // Delta-bar_L(H)
    int max_colour_multiplicity = 0;          // mu_L(H)
    Rational max_avg_colour_multiplicity{0};  // mu-bar_L(H)
    long long base_max_degree = 0;            // Delta(G), counting multiplicity
    int min_list_size = 0;
    int max_list_size = 0;
};

// Every violated invariant with the offending indices; empty when valid.
inline std::vector<Violation> validate(const CoverInstance& g) {
    std::vector<Violation> out;
    for (int v = 0; v < g.num_parts(); ++v)
        if (g.list_size(v) == 0)
            out.push_back({"empty-list", "part " + std::to_string(v) + " has an empty list"});

    const auto& edges = g.base_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u == e.v)
            out.push_back({"base-loop", "base edge " + std::to_string(i) + " is a loop at " +
                                            std::to_string(e.u)});
        if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v)
            out.push_back({"duplicate-base-edge",
                           "base pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") listed more than once"});
    }

    const auto& conf = g.conflict_edges();
    auto show = [&](int id) {
        const ColourRef c = g.colour_ref(id);
        return "(" + std::to_string(c.part) + "," + std::to_string(c.slot) + ")";
    };
    for (std::size_t i = 0; i < conf.size(); ++i) {
        const auto [a, b] = conf[i];
        const int pu = g.part_of(a), pv = g.part_of(b);
        if (pu == pv)
            out.push_back({"intra-part-edge", "conflict " + show(a) + "-" + show(b) +
                                                  " joins colours of part " + std::to_string(pu)});
        else if (!g.base_adjacent(pu, pv))
            out.push_back({"cover-graph-property",
                           "conflict " + show(a) + "-" + show(b) + " lies over non-edge (" +
                               std::to_string(pu) + "," + std::to_string(pv) + ")"});
        if (i > 0 && conf[i - 1] == conf[i])
            out.push_back({"parallel-conflict-edge",
                           "conflict " + show(a) + "-" + show(b) + " listed more than once"});
    }
    return out;
}

inline InstanceStats stats(const CoverInstance& g) {
    InstanceStats s;
    const int n = g.num_parts();
    s.min_list_size = g.min_list_size();
    s.max_list_size = g.max_list_size();
    for (int v = 0; v < n; ++v) {
        s.base_max_degree = std::max(s.base_max_degree, g.base_degree(v));
        if (g.list_size(v) > 0) {
            Rational avg(g.degree_sum(v), g.list_size(v));
            if (avg > s.max_avg_colour_degree) s.max_avg_colour_degree = avg;
        }
    }
    for (int id = 0; id < g.num_colours(); ++id) {
        s.max_degree = std::max(s.max_degree, g.degree(id));
        // neighbours are sorted by id, hence grouped by part
        const auto& nb = g.neighbours(id);
        std::size_t i = 0;
        while (i < nb.size()) {
            std::size_t j = i;
            const int p = g.part_of(nb[i]);
            while (j < nb.size() && g.part_of(nb[j]) == p) ++j;
            s.max_colour_multiplicity = std::max(s.max_colour_multiplicity, static_cast<int>(j - i));
            i = j;
        }
    }
    // e(L(u), L(v)) per adjacent ordered pair, divided by |L(u)|
    std::vector<std::pair<std::pair<int, int>, long long>> pair_counts;
    {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(g.conflict_edges().size());
        for (const auto& [a, b] : g.conflict_edges()) {
            int pu = g.part_of(a), pv = g.part_of(b);
            if (pv < pu) std::swap(pu, pv);
            pairs.emplace_back(pu, pv);
        }
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t i = 0; i < pairs.size();) {
            std::size_t j = i;
            while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
            pair_counts.push_back({pairs[i], static_cast<long long>(j - i)});
            i = j;
        }
    }
    for (const auto& [pq, count] : pair_counts) {
        for (int side : {pq.first, pq.second}) {
            Rational avg(count, g.list_size(side));
            if (avg > s.max_avg_colour_multiplicity) s.max_avg_colour_multiplicity = avg;
        }
    }
    return s;
}

inline std::vector<int> chosen_colour_ids(const CoverInstance& g, const PartialColouring& phi) {
    std::vector<int> ids;
    for (int v = 0; v < g.num_parts(); ++v)
        if (phi.is_assigned(v)) ids.push_back(g.colour_id(phi.colour(v)));
    return ids;
}

// First conflict edge joining two assigned colours, if any.
inline bool find_violated_edge(const CoverInstance& g, const PartialColouring& phi,
                               std::pair<ColourRef, ColourRef>* witness = nullptr) {
    std::vector<int> chosen(g.num_parts(), -1);
    for (int v = 0; v < g.num_parts(); ++v)
        if (phi.is_assigned(v)) chosen[v] = g.colour_id(phi.colour(v));
    for (int v = 0; v < g.num_parts(); ++v) {
        if (chosen[v] < 0) continue;
        for (int nb : g.neighbours(chosen[v])) {
            if (chosen[g.part_of(nb)] == nb) {
                if (witness) *witness = {g.colour_ref(chosen[v]), g.colour_ref(nb)};
                return true;
            }
        }
    }
    return false;
}

inline bool is_proper_partial(const CoverInstance& g, const PartialColouring& phi) {
    return !find_violated_edge(g, phi);
}

// True iff the assignment is total and no conflict edge joins two chosen colours.
inline bool is_independent_transversal(const CoverInstance& g, const PartialColouring& phi) {
    if (phi.num_parts() != g.num_parts() || !phi.is_total()) return false;
    return is_proper_partial(g, phi);
}

// Residual view under a proper partial colouring phi: for each uncoloured
// part, the slots whose colours have no conflict edge to any assigned colour.
struct ResidualView {
    const CoverInstance* parent = nullptr;
    PartialColouring colouring;
    std::vector<std::vector<int>> surviving;  // per parent part; empty for coloured parts
};

inline ResidualView apply_colouring(const CoverInstance& g, const PartialColouring& phi) {
    if (phi.num_parts() != g.num_parts())
        throw std::invalid_argument("apply_colouring: colouring size mismatch");
    if (!is_proper_partial(g, phi))
        throw std::invalid_argument("apply_colouring: colouring is not a proper partial colouring");
    std::vector<char> dead(g.num_colours(), 0);
    for (int v = 0; v < g.num_parts(); ++v) {
        if (!phi.is_assigned(v)) continue;
        for (int nb : g.neighbours(g.colour_id(phi.colour(v)))) dead[nb] = 1;
    }
    ResidualView view;
    view.parent = &g;
    view.colouring = phi;
    view.surviving.assign(g.num_parts(), {});
    for (int v = 0; v < g.num_parts(); ++v) {
        if (phi.is_assigned(v)) continue;
        for (int s = 0; s < g.list_size(v); ++s)
            if (!dead[g.colour_id({v, s})]) view.surviving[v].push_back(s);
    }
    return view;
}

// Mapping from a derived instance's (part, slot) back to its parent's.
struct InstanceMaps {
    std::vector<int> part_map;                // new part -> parent part
    std::vector<std::vector<int>> slot_map;   // per new part: new slot -> parent slot

    ColourRef to_parent(ColourRef c) const { return {part_map[c.part], slot_map[c.part][c.slot]}; }
};

inline InstanceMaps identity_maps(const CoverInstance& g) {
    InstanceMaps m;
    m.part_map.resize(g.num_parts());
    m.slot_map.resize(g.num_parts());
    for (int v = 0; v < g.num_parts(); ++v) {
        m.part_map[v] = v;
        m.slot_map[v].resize(g.list_size(v));
        for (int s = 0; s < g.list_size(v); ++s) m.slot_map[v][s] = s;
    }
    return m;
}

// outer: mid -> orig, inner: new -> mid
inline InstanceMaps compose(const InstanceMaps& outer, const InstanceMaps& inner) {
    InstanceMaps m;
    const int n = static_cast<int>(inner.part_map.size());
    m.part_map.resize(n);
    m.slot_map.resize(n);
    for (int v = 0; v < n; ++v) {
        const int mid = inner.part_map[v];
        m.part_map[v] = outer.part_map[mid];
        m.slot_map[v].resize(inner.slot_map[v].size());
        for (std::size_t s = 0; s < inner.slot_map[v].size(); ++s)
            m.slot_map[v][s] = outer.slot_map[mid][inner.slot_map[v][s]];
    }
    return m;
}

struct DerivedInstance {
    CoverInstance instance;
    InstanceMaps maps;
};

// Sub-cover induced by keeping the given slots of the given parts.
// kept_parts must be ascending; kept_slots[i] ascending slots of kept_parts[i].
inline DerivedInstance induce_subcover(const CoverInstance& g, const std::vector<int>& kept_parts,
                                       const std::vector<std::vector<int>>& kept_slots) {
    const int n = static_cast<int>(kept_parts.size());
    std::vector<int> new_part_of(g.num_parts(), -1);
    for (int v = 0; v < n; ++v) new_part_of[kept_parts[v]] = v;

    std::vector<int> new_slot_of(g.num_colours(), -1);
    std::vector<std::vector<std::string>> parts(n);
    for (int v = 0; v < n; ++v) {
        const int pv = kept_parts[v];
        parts[v].reserve(kept_slots[v].size());
        for (std::size_t i = 0; i < kept_slots[v].size(); ++i) {
            const int slot = kept_slots[v][i];
            new_slot_of[g.colour_id({pv, slot})] = static_cast<int>(i);
            parts[v].push_back(g.labels(pv)[slot]);
        }
    }

    std::vector<BaseEdge> base;
    for (const auto& e : g.base_edges())
        if (new_part_of[e.u] >= 0 && new_part_of[e.v] >= 0)
            base.push_back({new_part_of[e.u], new_part_of[e.v], e.multiplicity});

    std::vector<std::pair<ColourRef, ColourRef>> conflicts;
    for (const auto& [a, b] : g.conflict_edges()) {
        if (new_slot_of[a] < 0 || new_slot_of[b] < 0) continue;
        const int pu = new_part_of[g.part_of(a)], pv = new_part_of[g.part_of(b)];
        if (pu < 0 || pv < 0) continue;
        conflicts.push_back({{pu, new_slot_of[a]}, {pv, new_slot_of[b]}});
    }

    DerivedInstance out{CoverInstance(std::move(parts), std::move(base), conflicts), {}};
    out.maps.part_map = kept_parts;
    out.maps.slot_map = kept_slots;
    return out;
}

// Instance on the uncoloured parts whose conflicts are those of the parent
// restricted to surviving colours.
inline DerivedInstance materialize(const ResidualView& view) {
    const CoverInstance& g = *view.parent;
    std::vector<int> kept_parts;
    std::vector<std::vector<int>> kept_slots;
    for (int v = 0; v < g.num_parts(); ++v) {
        if (view.colouring.is_assigned(v)) continue;
        kept_parts.push_back(v);
        kept_slots.push_back(view.surviving[v]);
    }
    return induce_subcover(g, kept_parts, kept_slots);
}

// For each part, repeatedly removes a live colour of maximum external
// conflict degree (ties: lowest slot) until the target size is reached.
// Degrees are recomputed after every removal.
inline DerivedInstance truncate_lists(const CoverInstance& g, const std::vector<int>& target_sizes) {
    if (static_cast<int>(target_sizes.size()) != g.num_parts())
        throw std::invalid_argument("truncate_lists: one target per part required");
    for (int v = 0; v < g.num_parts(); ++v) {
        if (target_sizes[v] < 1)
            throw std::invalid_argument("truncate_lists: target must be >= 1 (part " +
                                        std::to_string(v) + ")");
        if (target_sizes[v] > g.list_size(v))
            throw std::invalid_argument("truncate_lists: target exceeds list size (part " +
                                        std::to_string(v) + ")");
    }
    std::vector<char> keep(g.num_colours(), 1);
    std::vector<int> deg(g.num_colours());
    for (int id = 0; id < g.num_colours(); ++id) deg[id] = g.degree(id);

    for (int v = 0; v < g.num_parts(); ++v) {
        int live = g.list_size(v);
        while (live > target_sizes[v]) {
            int best = -1, best_deg = -1;
            for (int s = 0; s < g.list_size(v); ++s) {
                const int id = g.colour_id({v, s});
                if (keep[id] && deg[id] > best_deg) {
                    best = id;
                    best_deg = deg[id];
                }
            }
            keep[best] = 0;
            for (int nb : g.neighbours(best))
                if (keep[nb]) --deg[nb];
            --live;
        }
    }

    std::vector<int> kept_parts(g.num_parts());
    std::vector<std::vector<int>> kept_slots(g.num_parts());
    for (int v = 0; v < g.num_parts(); ++v) {
        kept_parts[v] = v;
        for (int s = 0; s < g.list_size(v); ++s)
            if (keep[g.colour_id({v, s})]) kept_slots[v].push_back(s);
    }
    return induce_subcover(g, kept_parts, kept_slots);
}

}  // namespace transversal

#endif
