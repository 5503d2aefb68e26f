#ifndef TRANSVERSAL_PHASE1_HPP
#define TRANSVERSAL_PHASE1_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/rng.hpp"

namespace transversal {

// Removes exactly the colours with deg_H(c) > d sqrt(log d); the removal
// fraction per part is at most 1/sqrt(log d) whenever the average colour
// degree is at most d.
inline DerivedInstance trim_high_degree(const CoverInstance& g, double d) {
    if (!(d > 1.0)) throw std::invalid_argument("trim_high_degree: d must exceed 1");
    {
        const InstanceStats s = stats(g);
        if (to_double(s.max_avg_colour_degree) > d + 1e-9)
            throw std::invalid_argument("trim_high_degree: avg colour degree exceeds d");
    }
    const double threshold = d * std::sqrt(std::log(d));
    std::vector<int> kept_parts(g.num_parts());
    std::vector<std::vector<int>> kept_slots(g.num_parts());
    for (int v = 0; v < g.num_parts(); ++v) {
        kept_parts[v] = v;
        for (int s = 0; s < g.list_size(v); ++s)
            if (static_cast<double>(g.degree(g.colour_id({v, s}))) <= threshold)
                kept_slots[v].push_back(s);
        if (kept_slots[v].empty())
            throw std::invalid_argument("trim_high_degree: list of part " + std::to_string(v) +
                                        " would become empty");
    }
    return induce_subcover(g, kept_parts, kept_slots);
}

struct HalvingEvent {
    enum class Kind { degree_high, multiplicity_high } kind{};
    int colour_id = -1;
    int other_part = -1;  // for multiplicity events
};

struct HalveResult {
    enum class Status { halved, attempts_exhausted } status = Status::attempts_exhausted;
    CoverInstance instance;
    InstanceMaps maps;
    long long attempts_used = 0;
    std::vector<HalvingEvent> accepted_round_events;  // adaptive: events of the kept round
};

// Random halving: per part, sort colours by degree (ties by slot), pair
// consecutive mates, keep one mate per pair uniformly. A round is clean if
// no colour gains degree above deg/2 + d^{4/7} into the kept set and no
// (colour, part) pair exceeds mu/2 + mu^{4/7}. Both modes resample whole
// rounds looking for a clean one; on exhaustion strict fails while adaptive
// keeps the round with the fewest events and reports them.
inline HalveResult halve_lists(const CoverInstance& g, double d, double mu, std::uint64_t seed,
                               long long max_attempts, bool strict) {
    if (!(d > 1.0)) throw std::invalid_argument("halve_lists: d must exceed 1");
    if (!(mu >= 0.0)) throw std::invalid_argument("halve_lists: mu must be nonnegative");
    if (max_attempts < 1) throw std::invalid_argument("halve_lists: max_attempts must be >= 1");
    const int n = g.num_parts();
    const int size = n > 0 ? g.list_size(0) : 0;
    for (int v = 0; v < n; ++v)
        if (g.list_size(v) != size || g.list_size(v) % 2 != 0)
            throw std::invalid_argument("halve_lists: lists must be equal and even");
    if (strict) {
        const InstanceStats st = stats(g);
        if (!(mu > std::pow(std::log(d), 10.0)))
            throw std::invalid_argument("halve_lists (strict): need mu > log^10 d");
        if (static_cast<double>(st.max_colour_multiplicity) > mu)
            throw std::invalid_argument("halve_lists (strict): multiplicity exceeds mu");
        if (static_cast<double>(st.max_degree) > d * std::log(d))
            throw std::invalid_argument("halve_lists (strict): max degree exceeds d log d");
        if (to_double(st.max_avg_colour_degree) > d)
            throw std::invalid_argument("halve_lists (strict): avg colour degree exceeds d");
        if (size < d / 2.0)
            throw std::invalid_argument("halve_lists (strict): need list size 2s with s >= d/2");
    }
    const int s = size / 2;
    const int m = g.num_colours();
    const double deg_slack = std::pow(d, 4.0 / 7.0);
    const double mu_slack = std::pow(mu, 4.0 / 7.0);
    const double mu_threshold = mu / 2.0 + mu_slack;

    // mate order, fixed across attempts
    std::vector<std::vector<int>> order(n);  // per part: slots sorted by (deg, slot)
    for (int v = 0; v < n; ++v) {
        order[v].resize(size);
        for (int i = 0; i < size; ++i) order[v][i] = i;
        std::sort(order[v].begin(), order[v].end(), [&](int a, int b) {
            const int da = g.degree(g.colour_id({v, a})), db = g.degree(g.colour_id({v, b}));
            return da != db ? da < db : a < b;
        });
    }

    auto collect_events = [&](const std::vector<char>& kept, std::vector<HalvingEvent>& events,
                              bool stop_early) {
        for (int c = 0; c < m; ++c) {
            const auto& nb = g.neighbours(c);
            int kept_deg = 0;
            std::size_t i = 0;
            while (i < nb.size()) {
                std::size_t j = i;
                const int q = g.part_of(nb[i]);
                int kept_run = 0;
                while (j < nb.size() && g.part_of(nb[j]) == q) kept_run += kept[nb[j++]];
                kept_deg += kept_run;
                if (static_cast<double>(kept_run) > mu_threshold) {
                    events.push_back({HalvingEvent::Kind::multiplicity_high, c, q});
                    if (stop_early) return;
                }
                i = j;
            }
            if (static_cast<double>(kept_deg) >
                static_cast<double>(g.degree(c)) / 2.0 + deg_slack) {
                events.push_back({HalvingEvent::Kind::degree_high, c, -1});
                if (stop_early) return;
            }
        }
    };

    std::vector<char> kept(m), best_kept;
    std::size_t best_count = static_cast<std::size_t>(-1);
    std::vector<HalvingEvent> best_events;
    HalveResult out;
    for (long long attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(attempt));
        std::fill(kept.begin(), kept.end(), 0);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < s; ++i) {
                const int pick = order[v][2 * i + rng.uniform_int(2)];
                kept[g.colour_id({v, pick})] = 1;
            }
        std::vector<HalvingEvent> events;
        collect_events(kept, events, /*stop_early=*/strict);
        out.attempts_used = attempt + 1;
        if (events.empty()) {
            best_kept = kept;
            best_events.clear();
            best_count = 0;
            break;
        }
        if (!strict && events.size() < best_count) {
            best_kept = kept;
            best_events = std::move(events);
            best_count = best_events.size();
        }
    }
    if (best_count != 0 && strict) {
        out.status = HalveResult::Status::attempts_exhausted;
        return out;
    }
    if (best_kept.empty()) {  // adaptive with zero attempts recorded; cannot happen
        out.status = HalveResult::Status::attempts_exhausted;
        return out;
    }

    std::vector<int> kept_parts(n);
    std::vector<std::vector<int>> kept_slots(n);
    for (int v = 0; v < n; ++v) {
        kept_parts[v] = v;
        for (int slot = 0; slot < size; ++slot)
            if (best_kept[g.colour_id({v, slot})]) kept_slots[v].push_back(slot);
    }
    DerivedInstance derived = induce_subcover(g, kept_parts, kept_slots);

    if (strict) {  // lemma conclusions are acceptance conditions in strict mode
        const InstanceStats st = stats(derived.instance);
        const bool ok =
            to_double(st.max_avg_colour_degree) <= d / 2.0 + std::pow(d, 0.6) &&
            static_cast<double>(st.max_degree) <= (d * std::log(d)) / 2.0 + std::pow(d, 0.6) &&
            static_cast<double>(st.max_colour_multiplicity) <= mu / 2.0 + std::pow(mu, 0.6);
        if (!ok) {
            out.status = HalveResult::Status::attempts_exhausted;
            return out;
        }
    }

    out.status = HalveResult::Status::halved;
    out.instance = std::move(derived.instance);
    out.maps = std::move(derived.maps);
    out.accepted_round_events = std::move(best_events);
    return out;
}

struct ReductionTrace {
    double gamma = 0;
    int j = 0;
    int s0 = 0;
    struct Step {
        double d = 0;
        int s = 0;
        double mu = 0;
        long long attempts_used = 0;  // attempts spent reaching this state (0 for t = 0)
    };
    std::vector<Step> steps;  // states t = 0..j
    InstanceStats final_stats;
    bool cond_degree_bound = false;   // (i)  gamma^{-6/5}/2 < d_j <= (1 + eps/10) d / 2^j
    bool cond_mu_upper = false;       // (ii) mu_j <= 8 d_j^{1/6}
    bool cond_mu_lower = false;       // (iii) mu_t > log^10 d_t for all t < j
};

struct ReduceResult {
    enum class Status { reduced, shortcut, attempts_exhausted } status = Status::attempts_exhausted;
    CoverInstance instance;
    InstanceMaps maps;
    ReductionTrace trace;
};

// Phase 1: trim high-degree colours, then j rounds of random halving with
// d_{t+1} = d_t/2 + d_t^{2/3}, s_{t+1} = s_t/2, mu_{t+1} = mu_t/2 + mu_t^{2/3},
// where 2^{j-1} < gamma^{6/5} d <= 2^j, followed by a final trim. Returns
// shortcut when gamma^{-6/5} >= d (the input already satisfies the target
// multiplicity bound with d' = d).
inline ReduceResult reduce(const CoverInstance& g, double epsilon, double gamma, double d,
                           std::uint64_t seed, long long max_attempts, bool strict) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("reduce: epsilon must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("reduce: gamma must be positive");
    if (!(d > 1.0)) throw std::invalid_argument("reduce: d must exceed 1");
    {
        const InstanceStats st = stats(g);
        if (static_cast<double>(st.min_list_size) + 1e-9 < (1.0 + epsilon) * d)
            throw std::invalid_argument("reduce: need |L(v)| >= (1+epsilon) d");
        if (to_double(st.max_avg_colour_degree) > d + 1e-9)
            throw std::invalid_argument("reduce: avg colour degree exceeds d");
        if (static_cast<double>(st.max_colour_multiplicity) > gamma * d + 1e-9)
            throw std::invalid_argument("reduce: multiplicity exceeds gamma d");
    }

    ReduceResult out;
    out.trace.gamma = gamma;

    DerivedInstance trimmed = trim_high_degree(g, d);
    if (std::pow(gamma, -1.2) >= d) {
        out.status = ReduceResult::Status::shortcut;
        out.instance = std::move(trimmed.instance);
        out.maps = std::move(trimmed.maps);
        out.trace.final_stats = stats(out.instance);
        return out;
    }

    const double x = std::pow(gamma, 1.2) * d;  // in (1, d]
    int j = 1;
    while (std::pow(2.0, j) < x) ++j;
    out.trace.j = j;
    const long long block = 1LL << j;

    const int min_list = trimmed.instance.min_list_size();
    const long long s0 = (static_cast<long long>(min_list) / block) * block;
    if (s0 < block)
        throw std::runtime_error("reduce: lists too small for 2^j-divisible truncation");
    if (strict && static_cast<double>(s0) < (1.0 + 0.9 * epsilon) * d - static_cast<double>(block))
        throw std::invalid_argument("reduce (strict): no admissible s0 >= (1+9eps/10)d - 2^j");
    out.trace.s0 = static_cast<int>(s0);

    std::vector<int> targets(trimmed.instance.num_parts(), static_cast<int>(s0));
    DerivedInstance equalized = truncate_lists(trimmed.instance, targets);
    CoverInstance current = std::move(equalized.instance);
    InstanceMaps maps = compose(trimmed.maps, equalized.maps);

    double dt = d, mut = gamma * d;
    long long st_count = s0;
    out.trace.steps.push_back({dt, static_cast<int>(st_count), mut, 0});
    for (int t = 0; t < j; ++t) {
        HalveResult h = halve_lists(current, dt, mut, splitmix64(seed) + static_cast<std::uint64_t>(t),
                                    max_attempts, strict);
        if (h.status != HalveResult::Status::halved) {
            out.status = ReduceResult::Status::attempts_exhausted;
            out.trace.final_stats = stats(current);
            return out;
        }
        current = std::move(h.instance);
        maps = compose(maps, h.maps);
        dt = dt / 2.0 + std::pow(dt, 2.0 / 3.0);
        mut = mut / 2.0 + std::pow(mut, 2.0 / 3.0);
        st_count /= 2;
        out.trace.steps.push_back({dt, static_cast<int>(st_count), mut, h.attempts_used});
    }

    DerivedInstance final_trim = trim_high_degree(current, dt);
    current = std::move(final_trim.instance);
    maps = compose(maps, final_trim.maps);

    out.trace.final_stats = stats(current);
    out.trace.cond_degree_bound =
        std::pow(gamma, -1.2) / 2.0 < dt &&
        dt <= (1.0 + epsilon / 10.0) * d / static_cast<double>(block);
    out.trace.cond_mu_upper = mut <= 8.0 * std::pow(dt, 1.0 / 6.0);
    out.trace.cond_mu_lower = true;
    {
        double dd = d, mm = gamma * d;
        for (int t = 0; t < j; ++t) {
            if (!(mm > std::pow(std::log(dd), 10.0))) out.trace.cond_mu_lower = false;
            dd = dd / 2.0 + std::pow(dd, 2.0 / 3.0);
            mm = mm / 2.0 + std::pow(mm, 2.0 / 3.0);
        }
    }
    if (strict && !(out.trace.cond_degree_bound && out.trace.cond_mu_upper && out.trace.cond_mu_lower))
        throw std::runtime_error("reduce (strict): appendix conditions (i)-(iii) failed");

    out.status = ReduceResult::Status::reduced;
    out.instance = std::move(current);
    out.maps = std::move(maps);
    return out;
}

}  // namespace transversal

#endif
