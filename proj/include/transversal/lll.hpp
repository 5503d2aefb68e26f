#ifndef TRANSVERSAL_LLL_HPP
#define TRANSVERSAL_LLL_HPP

#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/rng.hpp"

namespace transversal {

struct FinisherParams {
    long long max_resamples = 1'000'000;
    std::uint64_t seed = 0;
    bool enforce_precondition = false;
    double precondition_factor = 4.0;  // min list size >= factor * avg colour degree
};

struct FinisherResult {
    enum class Status { found, resample_limit } status = Status::resample_limit;
    PartialColouring colouring;
    long long resamples = 0;
};

// Called after each resampling step with the violated edge that was selected
// and the full slot vectors before/after. Test hook; pass nullptr-equivalent
// (default) to skip the snapshots.
using ResampleObserver =
    std::function<void(std::pair<int, int> edge, const std::vector<int>& before,
                       const std::vector<int>& after)>;

// Moser-Tardos style resampling: start from a uniform random total
// assignment; while some conflict edge joins two chosen colours, pick the
// lexicographically least violated edge and redraw both endpoint parts
// uniformly. Does not prove nonexistence on resample_limit.
inline FinisherResult finish(const CoverInstance& g, const FinisherParams& params,
                             const ResampleObserver& observer = {}) {
    if (params.max_resamples < 1)
        throw std::invalid_argument("finish: max_resamples must be >= 1");
    if (params.enforce_precondition) {
        const InstanceStats s = stats(g);
        if (static_cast<double>(s.min_list_size) <
            params.precondition_factor * to_double(s.max_avg_colour_degree))
            throw std::invalid_argument(
                "finish: precondition |L(v)| >= factor * avg colour degree violated");
    }

    const int n = g.num_parts();
    Rng rng(params.seed);
    std::vector<int> slot(n);
    std::vector<int> chosen_id(n, -1);
    for (int v = 0; v < n; ++v) {
        slot[v] = rng.uniform_int(g.list_size(v));
        chosen_id[v] = g.colour_id({v, slot[v]});
    }

    // violated edges as (min id, max id); set order realizes lexicographic
    // least selection
    std::set<std::pair<int, int>> violated;
    auto edges_of = [&](int part, auto&& fn) {
        const int id = chosen_id[part];
        for (int nb : g.neighbours(id))
            if (chosen_id[g.part_of(nb)] == nb) fn(std::minmax(id, nb));
    };
    for (int v = 0; v < n; ++v) edges_of(v, [&](std::pair<int, int> e) { violated.insert(e); });

    FinisherResult out;
    while (!violated.empty()) {
        if (out.resamples >= params.max_resamples) {
            out.status = FinisherResult::Status::resample_limit;
            return out;
        }
        const auto edge = *violated.begin();
        const int pu = g.part_of(edge.first), pv = g.part_of(edge.second);
        std::vector<int> before;
        if (observer) before = slot;
        edges_of(pu, [&](std::pair<int, int> e) { violated.erase(e); });
        edges_of(pv, [&](std::pair<int, int> e) { violated.erase(e); });
        for (int p : {pu, pv}) {
            slot[p] = rng.uniform_int(g.list_size(p));
            chosen_id[p] = g.colour_id({p, slot[p]});
        }
        for (int p : {pu, pv})
            edges_of(p, [&](std::pair<int, int> e) { violated.insert(e); });
        ++out.resamples;
        if (observer) observer(edge, before, slot);
    }

    out.colouring = PartialColouring(n);
    for (int v = 0; v < n; ++v) out.colouring.assign(v, slot[v]);
    if (!is_independent_transversal(g, out.colouring))
        throw std::logic_error("finish: produced colouring failed verification");
    out.status = FinisherResult::Status::found;
    return out;
}

}  // namespace transversal

#endif
