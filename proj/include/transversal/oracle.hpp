#ifndef TRANSVERSAL_ORACLE_HPP
#define TRANSVERSAL_ORACLE_HPP

#include <limits>
#include <vector>

#include "transversal/cover.hpp"

namespace transversal {

// Exhaustive backtracking search; ground truth for everything else.
struct SearchBudget {
    long long max_nodes = std::numeric_limits<long long>::max();
    bool forward_checking = true;  // test hook; answers are identical either way
};

struct FindResult {
    enum class Status { found, none, budget_exhausted } status = Status::none;
    PartialColouring colouring;
    long long nodes = 0;
};

struct CountResult {
    enum class Status { counted, budget_exhausted } status = Status::counted;
    long long count = 0;
    long long nodes = 0;
};

namespace detail {

struct Search {
    const CoverInstance& g;
    const SearchBudget& budget;
    bool count_all;

    std::vector<int> chosen_id;  // per part, -1 if unassigned
    std::vector<int> slots;      // per part, -1 if unassigned
    long long nodes = 0;
    long long count = 0;
    bool exhausted = false;
    bool found = false;

    Search(const CoverInstance& g_, const SearchBudget& b, bool count_all_)
        : g(g_), budget(b), count_all(count_all_),
          chosen_id(g_.num_parts(), -1), slots(g_.num_parts(), -1) {}

    // Part order: smallest surviving list first, ties by index. Colour order:
    // ascending slot. With forward checking off, domains stay full and
    // consistency is checked against assigned parts only.
    bool dfs(const std::vector<std::vector<int>>& domains, int remaining) {
        if (remaining == 0) {
            if (count_all) {
                ++count;
                return false;
            }
            found = true;
            return true;
        }
        int pick = -1;
        for (int v = 0; v < g.num_parts(); ++v) {
            if (slots[v] >= 0) continue;
            if (pick < 0 || domains[v].size() < domains[pick].size()) pick = v;
        }
        for (int slot : domains[pick]) {
            if (++nodes > budget.max_nodes) {
                exhausted = true;
                return true;
            }
            const int id = g.colour_id({pick, slot});
            if (!budget.forward_checking) {
                bool clash = false;
                for (int nb : g.neighbours(id))
                    if (chosen_id[g.part_of(nb)] == nb) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            }
            slots[pick] = slot;
            chosen_id[pick] = id;
            bool dead_end = false;
            std::vector<std::vector<int>> next = domains;
            next[pick].clear();
            if (budget.forward_checking) {
                for (int nb : g.neighbours(id)) {
                    const int q = g.part_of(nb);
                    if (slots[q] >= 0) continue;
                    auto& dom = next[q];
                    const int nb_slot = g.colour_ref(nb).slot;
                    for (std::size_t i = 0; i < dom.size(); ++i)
                        if (dom[i] == nb_slot) {
                            dom.erase(dom.begin() + i);
                            break;
                        }
                }
                for (int v = 0; v < g.num_parts(); ++v)
                    if (slots[v] < 0 && next[v].empty()) {
                        dead_end = true;
                        break;
                    }
            }
            if (!dead_end && dfs(next, remaining - 1)) return true;
            slots[pick] = -1;
            chosen_id[pick] = -1;
            if (exhausted) return true;
        }
        return false;
    }

    std::vector<std::vector<int>> full_domains() const {
        std::vector<std::vector<int>> d(g.num_parts());
        for (int v = 0; v < g.num_parts(); ++v)
            for (int s = 0; s < g.list_size(v); ++s) d[v].push_back(s);
        return d;
    }
};

}  // namespace detail

// "found" passes is_independent_transversal; "none" only after exhaustion.
inline FindResult find_transversal_exact(const CoverInstance& g, const SearchBudget& budget = {}) {
    detail::Search s(g, budget, /*count_all=*/false);
    s.dfs(s.full_domains(), g.num_parts());
    FindResult out;
    out.nodes = s.nodes;
    if (s.exhausted) {
        out.status = FindResult::Status::budget_exhausted;
    } else if (s.found) {
        out.status = FindResult::Status::found;
        out.colouring = PartialColouring(g.num_parts());
        for (int v = 0; v < g.num_parts(); ++v) out.colouring.assign(v, s.slots[v]);
    } else {
        out.status = FindResult::Status::none;
    }
    return out;
}

inline CountResult count_transversals(const CoverInstance& g, const SearchBudget& budget = {}) {
    detail::Search s(g, budget, /*count_all=*/true);
    s.dfs(s.full_domains(), g.num_parts());
    CountResult out;
    out.nodes = s.nodes;
    out.count = s.count;
    out.status = s.exhausted ? CountResult::Status::budget_exhausted : CountResult::Status::counted;
    return out;
}

}  // namespace transversal

#endif
