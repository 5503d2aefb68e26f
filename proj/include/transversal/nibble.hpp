#ifndef TRANSVERSAL_NIBBLE_HPP
#define TRANSVERSAL_NIBBLE_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/rng.hpp"

namespace transversal {

struct NibbleParams {
    double p = 0.1;       // activation probability
    double epsilon = 0.5;
    double d = 2.0;       // average colour degree budget
    double Lambda = 2.0;  // list size parameter
    std::uint64_t seed = 0;
    long long max_attempts = 1000;
    bool strict = false;  // enforce the asymptotic hypotheses and thresholds
};

inline void validate_params(const NibbleParams& pr) {
    if (!(pr.p >= 0.0 && pr.p <= 1.0)) throw std::invalid_argument("nibble: p must be in [0,1]");
    if (!(pr.epsilon > 0.0)) throw std::invalid_argument("nibble: epsilon must be positive");
    if (!(pr.d > 1.0)) throw std::invalid_argument("nibble: d must exceed 1");
    if (!(pr.Lambda > 0.0)) throw std::invalid_argument("nibble: Lambda must be positive");
    if (pr.max_attempts < 1) throw std::invalid_argument("nibble: max_attempts must be >= 1");
    if (pr.strict) {
        const double logd = std::log(pr.d);
        if (!(pr.p <= 1.0 / logd && pr.p >= 1.0 / (logd * logd)))
            throw std::invalid_argument("nibble (strict): need 1/log d >= p >= 1/log^2 d");
        if (!((1.0 + pr.epsilon) * pr.d <= pr.Lambda && pr.Lambda <= 4.0 * pr.d))
            throw std::invalid_argument("nibble (strict): need (1+eps)d <= Lambda <= 4d");
    }
}

// One activation round: A, phi on A, and the retained set A^col (activated
// parts whose choice conflicts with no other activated choice).
struct WastefulColouring {
    std::vector<char> activated;       // per part
    std::vector<int> phi_slot;         // per part; defined (>= 0) exactly on A
    std::vector<char> retained;        // per part; v in A^col
    std::vector<int> activated_parts;  // ascending
    std::vector<int> retained_parts;   // ascending
};

// Draw order: parts ascending; one activation draw per part, one colour draw
// per activated part.
inline WastefulColouring sample_wasteful(const CoverInstance& g, const NibbleParams& pr, Rng& rng) {
    const int n = g.num_parts();
    WastefulColouring w;
    w.activated.assign(n, 0);
    w.phi_slot.assign(n, -1);
    w.retained.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!rng.bernoulli(pr.p)) continue;
        w.activated[v] = 1;
        w.phi_slot[v] = rng.uniform_int(g.list_size(v));
        w.activated_parts.push_back(v);
    }
    for (int v : w.activated_parts) {
        const int id = g.colour_id({v, w.phi_slot[v]});
        bool ok = true;
        for (int nb : g.neighbours(id)) {
            const int q = g.part_of(nb);
            if (w.activated[q] && g.colour_id({q, w.phi_slot[q]}) == nb) {
                ok = false;
                break;
            }
        }
        if (ok) {
            w.retained[v] = 1;
            w.retained_parts.push_back(v);
        }
    }
    return w;
}

// Keep(v, c) = (1 - p/Lambda)^deg, the survival formula. Exact when each
// part holds at most one neighbour of c; see survival_probability for the
// closed form that is exact in general.
inline double keep_probability(long long deg, double p, double Lambda) {
    if (deg < 0) throw std::invalid_argument("keep_probability: negative degree");
    if (!(Lambda > 0.0)) throw std::invalid_argument("keep_probability: Lambda must be positive");
    if (p / Lambda > 1.0) throw std::invalid_argument("keep_probability: p/Lambda exceeds 1");
    return std::pow(1.0 - p / Lambda, static_cast<double>(deg));
}

// Exact P(c in L^phi(v)): killing events from colours of one part are
// mutually exclusive, so P = prod over parts u of (1 - p*k_u/|L(u)|) with
// k_u = |N_H(c) cap L(u)|.
inline double survival_probability(const CoverInstance& g, int colour_id, double p) {
    const auto& nb = g.neighbours(colour_id);
    double prob = 1.0;
    std::size_t i = 0;
    while (i < nb.size()) {
        std::size_t j = i;
        const int q = g.part_of(nb[i]);
        while (j < nb.size() && g.part_of(nb[j]) == q) ++j;
        prob *= 1.0 - p * static_cast<double>(j - i) / static_cast<double>(g.list_size(q));
        i = j;
    }
    return prob;
}

struct BadEvent {
    enum class Kind {
        useable_low,    // A_v: useable_cols too far below expectation
        coloured_low,   // A_{v,c}: coloured_nbrs below the degree floor
        old_deg_high,   // A'_v: surviving old degree mass too large
        omega_star      // exceptional outcome, diagnostic only
    };
    Kind kind{};
    int part = -1;
    int slot = -1;  // -1 for per-part kinds

    friend bool operator==(const BadEvent&, const BadEvent&) = default;
};

inline const char* bad_event_name(BadEvent::Kind k) {
    switch (k) {
        case BadEvent::Kind::useable_low: return "A_v";
        case BadEvent::Kind::coloured_low: return "A_vc";
        case BadEvent::Kind::old_deg_high: return "A_prime_v";
        case BadEvent::Kind::omega_star: return "Omega_star_v";
    }
    return "?";
}

// All round random variables, computed per the wasteful phi (domain A).
struct NibbleRoundReport {
    std::vector<int> useable_cols, unuseable_cols;                    // per part
    std::vector<long long> remaining_cols_old_deg;                    // per part
    std::vector<long long> relevant_cols_lost_deg;                    // per part
    std::vector<int> coloured_nbrs, activated_nbrs, uncoloured_nbrs;  // per colour id
    std::vector<int> conflicts;                                       // per colour id
    std::vector<char> colour_useable;                                 // per colour id
    std::vector<char> omega_star;                                     // per part
    std::vector<BadEvent> triggered;  // omega events here; A-kinds appended by detect
};

inline NibbleRoundReport evaluate_round(const CoverInstance& g, const WastefulColouring& w,
                                        const NibbleParams& pr) {
    const int n = g.num_parts();
    const int m = g.num_colours();
    const double logd = std::log(pr.d);
    const double relevant_threshold = pr.d / (logd * logd * logd);
    const double conflict_threshold = logd * logd;

    NibbleRoundReport r;
    r.useable_cols.assign(n, 0);
    r.unuseable_cols.assign(n, 0);
    r.remaining_cols_old_deg.assign(n, 0);
    r.relevant_cols_lost_deg.assign(n, 0);
    r.coloured_nbrs.assign(m, 0);
    r.activated_nbrs.assign(m, 0);
    r.uncoloured_nbrs.assign(m, 0);
    r.conflicts.assign(m, 0);
    r.colour_useable.assign(m, 1);
    r.omega_star.assign(n, 0);

    std::vector<int> chosen_id(n, -1);
    for (int v : w.activated_parts) chosen_id[v] = g.colour_id({v, w.phi_slot[v]});

    // c is phi-unuseable iff some activated u chose a neighbour of c
    for (int v : w.activated_parts)
        for (int nb : g.neighbours(chosen_id[v])) r.colour_useable[nb] = 0;

    for (int c = 0; c < m; ++c) {
        const int v = g.part_of(c);
        const long long deg = g.degree(c);
        if (r.colour_useable[c]) {
            ++r.useable_cols[v];
            r.remaining_cols_old_deg[v] += deg;
        } else {
            ++r.unuseable_cols[v];
            if (static_cast<double>(deg) >= relevant_threshold) r.relevant_cols_lost_deg[v] += deg;
        }
        for (int nb : g.neighbours(c)) {
            const int q = g.part_of(nb);
            if (w.activated[q]) {
                ++r.activated_nbrs[c];
                if (w.retained[q]) ++r.coloured_nbrs[c];
                else ++r.uncoloured_nbrs[c];
            }
            if (chosen_id[q] == nb) ++r.conflicts[c];
        }
    }

    // Omega*_v: some u within base distance 2 of v has a colour with
    // conflicts >= log^2 d. Multiplicity is ignored for N^2.
    std::vector<char> part_flag(n, 0);
    bool any_flag = false;
    for (int c = 0; c < m; ++c)
        if (static_cast<double>(r.conflicts[c]) >= conflict_threshold) {
            part_flag[g.part_of(c)] = 1;
            any_flag = true;
        }
    if (any_flag) {
        for (int v = 0; v < n; ++v) {
            bool hit = false;
            for (int u : g.base_neighbours(v)) {
                if (part_flag[u]) {
                    hit = true;
                    break;
                }
                for (int t : g.base_neighbours(u))
                    if (t != v && part_flag[t]) {
                        hit = true;
                        break;
                    }
                if (hit) break;
            }
            if (hit) {
                r.omega_star[v] = 1;
                r.triggered.push_back({BadEvent::Kind::omega_star, v, -1});
            }
        }
    }
    return r;
}

// Closed-form expectations for the bad-event thresholds (linearity over the
// exact survival probabilities; never a Monte Carlo estimate).
struct RoundExpectations {
    std::vector<double> expected_useable;  // per part
};

inline RoundExpectations compute_expectations(const CoverInstance& g, const NibbleParams& pr) {
    RoundExpectations e;
    e.expected_useable.assign(g.num_parts(), 0.0);
    for (int c = 0; c < g.num_colours(); ++c)
        e.expected_useable[g.part_of(c)] += survival_probability(g, c, pr.p);
    return e;
}

// The three deviation events of the round, thresholds verbatim. A_{v,c} is
// vacuous for zero-degree colours (there is no degree mass to lose).
inline std::vector<BadEvent> detect_bad_events(const CoverInstance& g, const NibbleRoundReport& r,
                                               const NibbleParams& pr,
                                               const RoundExpectations& expect) {
    std::vector<BadEvent> events;
    const double p54 = std::pow(pr.p, 1.25);
    const double floor67 = std::pow(pr.d, 6.0 / 7.0);
    for (int v = 0; v < g.num_parts(); ++v) {
        const double e = expect.expected_useable[v];
        if (e > 0.0 && static_cast<double>(r.useable_cols[v]) / e < 1.0 - p54)
            events.push_back({BadEvent::Kind::useable_low, v, -1});
    }
    for (int c = 0; c < g.num_colours(); ++c) {
        const long long deg = g.degree(c);
        if (deg == 0) continue;
        const double denom = std::max(pr.p * static_cast<double>(deg), floor67);
        if (static_cast<double>(r.coloured_nbrs[c]) / denom < 1.0 / (1.0 + pr.epsilon / 8.0)) {
            const ColourRef ref = g.colour_ref(c);
            events.push_back({BadEvent::Kind::coloured_low, ref.part, ref.slot});
        }
    }
    for (int v = 0; v < g.num_parts(); ++v) {
        const double e = expect.expected_useable[v];
        if (static_cast<double>(r.remaining_cols_old_deg[v]) > (1.0 + p54) * pr.d * e)
            events.push_back({BadEvent::Kind::old_deg_high, v, -1});
    }
    return events;
}

struct NibbleOutcome {
    enum class Status { advanced, attempts_exhausted } status = Status::attempts_exhausted;
    PartialColouring colouring;  // domain = A^col, input-instance indexing
    CoverInstance residual;      // uncoloured parts, truncated lists
    InstanceMaps maps;           // residual -> input instance
    NibbleRoundReport report;
    long long attempts_used = 0;
    int target_list_size = 0;
    std::vector<int> achieved_list_sizes;
    Rational achieved_avg_degree{0};
};

// One round: sample -> evaluate -> detect, then colour A^col, build the
// residual via apply_colouring and truncate to the target size. Strict mode
// rejects rounds with any A-event, short residual lists, or an average
// degree above the target bound. Adaptive mode reports bad events instead
// of rejecting on them (the A_{v,c} floor d^{6/7} makes event-free rounds
// unattainable outside the asymptotic regime); it retries rounds that
// would leave some list empty, prefers rounds leaving every list at least
// min(target, 2) colours, and truncates to min(target, actual).
inline NibbleOutcome nibble_round(const CoverInstance& g, const NibbleParams& pr) {
    validate_params(pr);
    if (pr.strict) {
        const InstanceStats s = stats(g);
        if (to_double(s.max_avg_colour_degree) > pr.d)
            throw std::invalid_argument("nibble_round (strict): avg colour degree exceeds d");
        if (static_cast<double>(s.max_colour_multiplicity) > std::pow(pr.d, 0.25))
            throw std::invalid_argument("nibble_round (strict): mu exceeds d^{1/4}");
        if (static_cast<double>(s.max_degree) > pr.d * std::log(pr.d))
            throw std::invalid_argument("nibble_round (strict): max degree exceeds d log d");
        if (s.min_list_size != s.max_list_size ||
            s.min_list_size != static_cast<int>(std::ceil(pr.Lambda)))
            throw std::invalid_argument("nibble_round (strict): lists must all equal ceil(Lambda)");
    }
    const RoundExpectations expect = compute_expectations(g, pr);
    const int target = static_cast<int>(
        std::ceil((1.0 - pr.p / (1.0 + 3.0 * pr.epsilon / 4.0)) * pr.Lambda));
    const double degree_target = (1.0 - pr.p / (1.0 + pr.epsilon / 4.0)) * pr.d;

    NibbleOutcome out;
    out.target_list_size = target;
    const int floor_size = std::min(target, 2);

    struct Candidate {
        bool valid = false;
        int short_parts = 0;  // parts left below min(target, 2)
        PartialColouring phi;
        ResidualView view;
        NibbleRoundReport report;
        long long attempt = 0;
    } best;

    auto finalize = [&](Candidate&& cand, long long attempts) {
        DerivedInstance residual = materialize(cand.view);
        std::vector<int> targets(residual.instance.num_parts());
        for (int v = 0; v < residual.instance.num_parts(); ++v)
            targets[v] = std::min(target, residual.instance.list_size(v));
        DerivedInstance truncated = truncate_lists(residual.instance, targets);
        out.status = NibbleOutcome::Status::advanced;
        out.colouring = std::move(cand.phi);
        out.residual = std::move(truncated.instance);
        out.maps = compose(residual.maps, truncated.maps);
        out.report = std::move(cand.report);
        out.attempts_used = attempts;
        out.achieved_list_sizes.resize(out.residual.num_parts());
        for (int v = 0; v < out.residual.num_parts(); ++v)
            out.achieved_list_sizes[v] = out.residual.list_size(v);
        out.achieved_avg_degree = stats(out.residual).max_avg_colour_degree;
    };

    for (long long attempt = 0; attempt < pr.max_attempts; ++attempt) {
        Rng rng = Rng::substream(pr.seed, static_cast<std::uint64_t>(attempt));
        const WastefulColouring w = sample_wasteful(g, pr, rng);
        NibbleRoundReport report = evaluate_round(g, w, pr);
        auto events = detect_bad_events(g, report, pr, expect);
        const bool any_a_event = !events.empty();
        report.triggered.insert(report.triggered.end(), events.begin(), events.end());

        if (pr.strict && any_a_event) continue;

        PartialColouring phi(g.num_parts());
        for (int v : w.retained_parts) phi.assign(v, w.phi_slot[v]);
        ResidualView view = apply_colouring(g, phi);

        bool usable = true, meets_target = true;
        int short_parts = 0;
        for (int v = 0; v < g.num_parts(); ++v) {
            if (phi.is_assigned(v)) continue;
            const int survivors = static_cast<int>(view.surviving[v].size());
            if (survivors == 0) usable = false;
            if (survivors < target) meets_target = false;
            if (survivors < floor_size) ++short_parts;
        }
        if (!usable) continue;
        if (pr.strict) {
            if (!meets_target) continue;
            finalize(Candidate{true, short_parts, std::move(phi), std::move(view),
                               std::move(report), attempt},
                     attempt + 1);
            // the degree conclusion is an acceptance condition in strict mode
            if (to_double(out.achieved_avg_degree) > degree_target) {
                out = NibbleOutcome{};
                out.target_list_size = target;
                continue;
            }
            return out;
        }
        if (short_parts == 0) {
            finalize(Candidate{true, 0, std::move(phi), std::move(view), std::move(report),
                               attempt},
                     attempt + 1);
            return out;
        }
        if (!best.valid || short_parts < best.short_parts)
            best = Candidate{true, short_parts, std::move(phi), std::move(view), std::move(report),
                             attempt};
    }
    if (!pr.strict && best.valid) {
        finalize(std::move(best), pr.max_attempts);
        return out;
    }
    out.attempts_used = pr.max_attempts;
    return out;
}

// Monte Carlo estimation of the round's expectation and concentration
// behaviour over independent trials (substream per trial index).
struct MonteCarloOptions {
    bool track_bad_events = true;
    bool track_omega_star = true;
    int max_tracked_colours = 512;  // track all colours up to this many, else one per part
    int jobs = 1;
};

struct PartEstimate {
    double mean_useable = 0, se_useable = 0;
    double expected_useable = 0;    // exact closed form
    double keep_formula_sum = 0;    // sum of Keep(v, c) over the list
    double paper_lower_bound = 0;   // (1 - p/(1+eps)) |L(v)|
    long long omega_star_count = 0;
};

struct ColourEstimate {
    ColourRef ref;
    int degree = 0;
    double survival_freq = 0, survival_se = 0;
    double survival_exact = 0, keep_formula = 0;
    double mean_coloured_nbrs = 0, se_coloured_nbrs = 0;
    double coloured_lower_bound = 0;  // p (1 - p/(1+eps)) deg
};

struct EstimateReport {
    long long trials = 0;
    std::vector<PartEstimate> parts;
    std::vector<ColourEstimate> colours;
    // indexed by BadEvent::Kind (A_v, A_vc, A'_v): total triggers and trials
    // with at least one trigger
    std::array<long long, 3> event_totals{};
    std::array<long long, 3> event_trials{};
};

inline EstimateReport monte_carlo_check(const CoverInstance& g, const NibbleParams& pr,
                                        long long trials, MonteCarloOptions opts = {}) {
    validate_params(pr);
    if (trials < 100) throw std::invalid_argument("monte_carlo_check: need trials >= 100");

    const int n = g.num_parts();
    const int m = g.num_colours();
    const RoundExpectations expect = compute_expectations(g, pr);

    std::vector<int> tracked;
    if (m <= opts.max_tracked_colours) {
        tracked.resize(m);
        for (int c = 0; c < m; ++c) tracked[c] = c;
    } else {
        for (int v = 0; v < n; ++v) {  // highest degree colour per part, lowest slot on ties
            int best = -1, best_deg = -1;
            for (int s = 0; s < g.list_size(v); ++s) {
                const int id = g.colour_id({v, s});
                if (g.degree(id) > best_deg) {
                    best = id;
                    best_deg = g.degree(id);
                }
            }
            tracked.push_back(best);
        }
    }
    struct Accum {
        std::vector<double> useable_sum, useable_sq;
        std::vector<long long> omega_count;
        std::vector<double> surv_count, coloured_sum, coloured_sq;
        std::array<long long, 3> event_totals{}, event_trials{};
        void init(int n_, int t_) {
            useable_sum.assign(n_, 0);
            useable_sq.assign(n_, 0);
            omega_count.assign(n_, 0);
            surv_count.assign(t_, 0);
            coloured_sum.assign(t_, 0);
            coloured_sq.assign(t_, 0);
        }
    };

    auto run_range = [&](long long lo, long long hi, Accum& acc) {
        acc.init(n, static_cast<int>(tracked.size()));
        std::vector<int> chosen_id(n);
        std::vector<char> dead(m);
        for (long long t = lo; t < hi; ++t) {
            Rng rng = Rng::substream(pr.seed, static_cast<std::uint64_t>(t));
            const WastefulColouring w = sample_wasteful(g, pr, rng);
            if (opts.track_bad_events || opts.track_omega_star) {
                NibbleRoundReport r = evaluate_round(g, w, pr);
                for (int v = 0; v < n; ++v) {
                    acc.useable_sum[v] += r.useable_cols[v];
                    acc.useable_sq[v] += static_cast<double>(r.useable_cols[v]) * r.useable_cols[v];
                    acc.omega_count[v] += r.omega_star[v];
                }
                for (std::size_t i = 0; i < tracked.size(); ++i) {
                    const int c = tracked[i];
                    acc.surv_count[i] += r.colour_useable[c];
                    acc.coloured_sum[i] += r.coloured_nbrs[c];
                    acc.coloured_sq[i] +=
                        static_cast<double>(r.coloured_nbrs[c]) * r.coloured_nbrs[c];
                }
                if (opts.track_bad_events) {
                    const auto events = detect_bad_events(g, r, pr, expect);
                    std::array<bool, 3> seen{};
                    for (const auto& e : events) {
                        const int k = static_cast<int>(e.kind);
                        ++acc.event_totals[k];
                        seen[k] = true;
                    }
                    for (int k = 0; k < 3; ++k) acc.event_trials[k] += seen[k];
                }
            } else {
                // light path: survival marks and retained-part scans only
                std::fill(dead.begin(), dead.end(), 0);
                for (int v : w.activated_parts) {
                    chosen_id[v] = g.colour_id({v, w.phi_slot[v]});
                    for (int nb : g.neighbours(chosen_id[v])) dead[nb] = 1;
                }
                for (int v = 0; v < n; ++v) {
                    int useable = 0;
                    for (int s = 0; s < g.list_size(v); ++s)
                        useable += !dead[g.colour_id({v, s})];
                    acc.useable_sum[v] += useable;
                    acc.useable_sq[v] += static_cast<double>(useable) * useable;
                }
                for (std::size_t i = 0; i < tracked.size(); ++i) {
                    const int c = tracked[i];
                    acc.surv_count[i] += !dead[c];
                    int coloured = 0;
                    for (int nb : g.neighbours(c)) coloured += w.retained[g.part_of(nb)];
                    acc.coloured_sum[i] += coloured;
                    acc.coloured_sq[i] += static_cast<double>(coloured) * coloured;
                }
            }
        }
    };

    const int jobs = std::max(1, opts.jobs);
    std::vector<Accum> accs(jobs);
    if (jobs == 1) {
        run_range(0, trials, accs[0]);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) {
            const long long lo = trials * j / jobs, hi = trials * (j + 1) / jobs;
            threads.emplace_back([&, j, lo, hi] { run_range(lo, hi, accs[j]); });
        }
        for (auto& th : threads) th.join();
    }
    Accum total;
    total.init(n, static_cast<int>(tracked.size()));
    for (const auto& a : accs) {
        for (int v = 0; v < n; ++v) {
            total.useable_sum[v] += a.useable_sum[v];
            total.useable_sq[v] += a.useable_sq[v];
            total.omega_count[v] += a.omega_count[v];
        }
        for (std::size_t i = 0; i < tracked.size(); ++i) {
            total.surv_count[i] += a.surv_count[i];
            total.coloured_sum[i] += a.coloured_sum[i];
            total.coloured_sq[i] += a.coloured_sq[i];
        }
        for (int k = 0; k < 3; ++k) {
            total.event_totals[k] += a.event_totals[k];
            total.event_trials[k] += a.event_trials[k];
        }
    }

    const double T = static_cast<double>(trials);
    auto se_of = [&](double sum, double sq) {
        const double mean = sum / T;
        const double var = std::max(0.0, (sq - T * mean * mean) / std::max(1.0, T - 1));
        return std::sqrt(var / T);
    };

    EstimateReport rep;
    rep.trials = trials;
    rep.event_totals = total.event_totals;
    rep.event_trials = total.event_trials;
    rep.parts.resize(n);
    for (int v = 0; v < n; ++v) {
        auto& pe = rep.parts[v];
        pe.mean_useable = total.useable_sum[v] / T;
        pe.se_useable = se_of(total.useable_sum[v], total.useable_sq[v]);
        pe.expected_useable = expect.expected_useable[v];
        pe.paper_lower_bound = (1.0 - pr.p / (1.0 + pr.epsilon)) * g.list_size(v);
        pe.omega_star_count = total.omega_count[v];
        double keep_sum = 0;
        for (int s = 0; s < g.list_size(v); ++s)
            keep_sum += keep_probability(g.degree(g.colour_id({v, s})), pr.p, pr.Lambda);
        pe.keep_formula_sum = keep_sum;
    }
    rep.colours.resize(tracked.size());
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        auto& ce = rep.colours[i];
        const int c = tracked[i];
        ce.ref = g.colour_ref(c);
        ce.degree = g.degree(c);
        ce.survival_freq = total.surv_count[i] / T;
        ce.survival_se = std::sqrt(std::max(0.0, ce.survival_freq * (1.0 - ce.survival_freq)) / T);
        ce.survival_exact = survival_probability(g, c, pr.p);
        ce.keep_formula = keep_probability(ce.degree, pr.p, pr.Lambda);
        ce.mean_coloured_nbrs = total.coloured_sum[i] / T;
        ce.se_coloured_nbrs = se_of(total.coloured_sum[i], total.coloured_sq[i]);
        ce.coloured_lower_bound = pr.p * (1.0 - pr.p / (1.0 + pr.epsilon)) * ce.degree;
    }
    return rep;
}

}  // namespace transversal

#endif
