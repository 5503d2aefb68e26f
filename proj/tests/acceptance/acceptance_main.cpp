// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/naive.hpp"
#include "transversal/transversal.hpp"

using namespace transversal;
using transversal::testing::naive_count_list_colourings;
using transversal::testing::naive_count_transversals;
using transversal::testing::tiny1;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. count_transversals equals naive full enumeration on 500 random small
// instances, under 60 s total.
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    long long mismatches = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng meta(900 + i);
        const int parts = 2 + meta.uniform_int(5);       // <= 6
        const int list_size = 1 + meta.uniform_int(4);   // <= 4
        const double edge_prob = 0.15 + 0.5 * meta.uniform01();
        const CoverInstance g =
            gen_random_cover(parts, list_size, edge_prob, 0.8, list_size, 7000 + i);
        if (count_transversals(g).count != naive_count_transversals(g)) ++mismatches;
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream ss;
    ss << "500 instances, " << mismatches << " mismatches, " << elapsed << " s";
    return {mismatches == 0 && elapsed < 60.0, ss.str()};
}

// 2. proper-colouring counts equal transversal counts of the list cover for
// every list-assignment over {1,2,3} on paths, cycles and K4.
Outcome criterion2() {
    std::vector<std::pair<std::string, MultigraphSpec>> graphs;
    auto path = [](int n) {
        MultigraphSpec b;
        b.num_vertices = n;
        for (int i = 0; i + 1 < n; ++i) b.edges.push_back({i, i + 1, 1});
        return b;
    };
    auto cycle = [&](int n) {
        MultigraphSpec b = path(n);
        b.edges.push_back({0, n - 1, 1});
        return b;
    };
    MultigraphSpec k4;
    k4.num_vertices = 4;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.edges.push_back({u, v, 1});
    graphs = {{"P2", path(2)}, {"P3", path(3)}, {"P4", path(4)}, {"P5", path(5)},
              {"C3", cycle(3)}, {"C4", cycle(4)}, {"C5", cycle(5)}, {"K4", k4}};

    long long cases = 0, mismatches = 0;
    for (const auto& [name, base] : graphs) {
        const int n = base.num_vertices;
        std::vector<int> mask(n, 1);  // nonempty subsets of {1,2,3} as bitmasks 1..7
        while (true) {
            ListAssignment a;
            a.base = base;
            a.lists.resize(n);
            for (int v = 0; v < n; ++v)
                for (int bit = 0; bit < 3; ++bit)
                    if (mask[v] >> bit & 1) a.lists[v].push_back(std::to_string(bit + 1));
            ++cases;
            if (naive_count_list_colourings(a) != count_transversals(build_list_cover(a)).count)
                ++mismatches;
            int v = n - 1;
            while (v >= 0 && mask[v] == 7) mask[v--] = 1;
            if (v < 0) break;
            ++mask[v];
        }
    }
    std::ostringstream ss;
    ss << cases << " list-assignments, " << mismatches << " mismatches";
    return {mismatches == 0, ss.str()};
}

// 3. Keep-formula check on TINY1: empirical survival of colour a over 1e5
// trials against (1 - p/Lambda)^deg = 0.5625, within 3 binomial SEs, < 10 s.
Outcome criterion3() {
    const auto t0 = std::chrono::steady_clock::now();
    NibbleParams pr;
    pr.p = 0.5;
    pr.epsilon = 0.5;
    pr.d = 2.0;
    pr.Lambda = 2.0;
    pr.seed = 31337;
    MonteCarloOptions opts;
    opts.track_bad_events = false;
    opts.track_omega_star = false;
    const EstimateReport rep = monte_carlo_check(tiny1(), pr, 100000, opts);
    const ColourEstimate& a = rep.colours[0];  // colour a = (part 0, slot 0)
    const double keep = keep_probability(a.degree, pr.p, pr.Lambda);  // 0.5625
    const double elapsed = seconds_since(t0);
    const double deviation = std::abs(a.survival_freq - keep);
    const bool pass = deviation <= 3.0 * a.survival_se && elapsed < 10.0;
    std::ostringstream ss;
    ss << "measured Pr[a in L^phi(u)] = " << a.survival_freq << ", formula value " << keep
       << ", |diff| = " << deviation << " vs 3*SE = " << 3.0 * a.survival_se
       << " (exact survival probability is " << a.survival_exact << "), " << elapsed << " s";
    return {pass, ss.str()};
}

// 4. expectation bound: sum of Keep(v, c) >= (1 - p/(1+eps)) Lambda for every
// part (1e-9 tolerance), and Monte Carlo means over 1e4 trials agree with
// the closed form within 3 SE, on 20 instances with d in [50, 200].
Outcome criterion4() {
    std::ostringstream ss;
    bool pass = true;
    for (int i = 0; i < 20; ++i) {
        const double d_target = 60.0 + 7.0 * i;  // 60 .. 193
        const int parts = static_cast<int>(d_target) + 1;
        const int Lambda = static_cast<int>(std::lround(1.5 * d_target));
        const double edge_prob = d_target / (static_cast<double>(parts - 1) * Lambda);
        const CoverInstance g =
            gen_random_cover(parts, Lambda, edge_prob, 1.0, 2, 5000 + static_cast<std::uint64_t>(i));

        const InstanceStats st = stats(g);
        const double d = to_double(st.max_avg_colour_degree);
        if (!(d >= 50.0 && d <= 200.0)) {
            pass = false;
            ss << "[i=" << i << " d=" << d << " out of range] ";
            continue;
        }
        if (static_cast<double>(st.max_colour_multiplicity) > std::pow(d, 0.25) ||
            static_cast<double>(st.max_degree) > d * std::log(d)) {
            pass = false;
            ss << "[i=" << i << " hypothesis violation] ";
            continue;
        }
        NibbleParams pr;
        pr.d = d;
        pr.Lambda = static_cast<double>(Lambda);
        pr.epsilon = pr.Lambda / d - 1.0;
        pr.p = 1.0 / std::log(d);
        pr.seed = 77001 + static_cast<std::uint64_t>(i) * 1000003;

        const double bound_factor = 1.0 - pr.p / (1.0 + pr.epsilon);
        for (int v = 0; v < g.num_parts() && pass; ++v) {
            double keep_sum = 0;
            for (int s = 0; s < g.list_size(v); ++s)
                keep_sum += keep_probability(g.degree(g.colour_id({v, s})), pr.p, pr.Lambda);
            if (keep_sum < bound_factor * pr.Lambda - 1e-9 * std::max(1.0, bound_factor * pr.Lambda)) {
                pass = false;
                ss << "[i=" << i << " part " << v << " Keep-sum bound failed] ";
            }
        }

        MonteCarloOptions opts;
        opts.track_bad_events = false;
        opts.track_omega_star = false;
        opts.max_tracked_colours = 0;  // one tracked colour per part is enough here
        opts.jobs = 4;
        const EstimateReport rep = monte_carlo_check(g, pr, 10000, opts);
        int track = 0;  // the part attaining the maximum average colour degree
        for (int v = 1; v < g.num_parts(); ++v)
            if (Rational(g.degree_sum(v), g.list_size(v)) >
                Rational(g.degree_sum(track), g.list_size(track)))
                track = v;
        const PartEstimate& pe = rep.parts[track];
        const double dev = std::abs(pe.mean_useable - pe.expected_useable);
        if (dev > 3.0 * pe.se_useable) {
            pass = false;
            ss << "[i=" << i << " MC mean off by " << dev << " > 3*SE=" << 3.0 * pe.se_useable
               << "] ";
        }
    }
    if (ss.str().empty()) ss << "20 instances: Keep-sum bound exact on every part; MC within 3 SE";
    return {pass, ss.str()};
}

// 5. round identities on 1e4 sampled rounds across 10 instances.
Outcome criterion5() {
    long long rounds = 0, violations = 0;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const CoverInstance g = gen_random_cover(12, 8, 0.1, 0.8, 3, 600 + i);
        NibbleParams pr;
        pr.p = 0.3;
        pr.epsilon = 0.5;
        pr.d = std::max(2.0, to_double(stats(g).max_avg_colour_degree));
        pr.Lambda = 8.0;
        for (int t = 0; t < 1000; ++t) {
            Rng rng = Rng::substream(2222 + i, static_cast<std::uint64_t>(t));
            const WastefulColouring w = sample_wasteful(g, pr, rng);
            const NibbleRoundReport r = evaluate_round(g, w, pr);
            ++rounds;
            for (int v = 0; v < g.num_parts(); ++v)
                if (r.useable_cols[v] + r.unuseable_cols[v] != g.list_size(v)) ++violations;
            for (int c = 0; c < g.num_colours(); ++c)
                if (r.coloured_nbrs[c] + r.uncoloured_nbrs[c] != r.activated_nbrs[c]) ++violations;
        }
    }
    std::ostringstream ss;
    ss << rounds << " rounds, " << violations << " identity violations";
    return {rounds == 10000 && violations == 0, ss.str()};
}

// 6. halving conclusions on 50 generated instances with d >= 100 (adaptive):
// all three output bounds with the 3/5-exponent slack, and lists halve
// exactly in every round.
Outcome criterion6() {
    std::ostringstream ss;
    bool pass = true;
    for (int i = 0; i < 50; ++i) {
        const int parts = 3 + i % 4;
        const double d_target = 112.0 + 8.0 * (i % 4);
        const double edge_prob = d_target / ((parts - 1) * 128.0);
        const CoverInstance g =
            gen_random_cover(parts, 128, edge_prob, 1.0, 128, 8800 + static_cast<std::uint64_t>(i));
        const InstanceStats st = stats(g);
        const double d = to_double(st.max_avg_colour_degree);
        if (d < 100.0) {
            pass = false;
            ss << "[i=" << i << " d=" << d << " below 100] ";
            continue;
        }
        const double mu = std::max(1.0, static_cast<double>(st.max_colour_multiplicity));
        const HalveResult h =
            halve_lists(g, d, mu, 9900 + static_cast<std::uint64_t>(i), 2000, false);
        if (h.status != HalveResult::Status::halved) {
            pass = false;
            ss << "[i=" << i << " halving exhausted] ";
            continue;
        }
        for (int v = 0; v < h.instance.num_parts(); ++v)
            if (h.instance.list_size(v) != 64) {
                pass = false;
                ss << "[i=" << i << " list did not halve] ";
            }
        const InstanceStats out = stats(h.instance);
        if (to_double(out.max_avg_colour_degree) > d / 2.0 + std::pow(d, 0.6)) {
            pass = false;
            ss << "[i=" << i << " avg degree bound failed] ";
        }
        if (static_cast<double>(out.max_degree) > (d * std::log(d)) / 2.0 + std::pow(d, 0.6)) {
            pass = false;
            ss << "[i=" << i << " max degree bound failed] ";
        }
        if (static_cast<double>(out.max_colour_multiplicity) > mu / 2.0 + std::pow(mu, 0.6)) {
            pass = false;
            ss << "[i=" << i << " multiplicity bound failed] ";
        }
    }
    if (ss.str().empty()) ss << "50 instances: bounds hold, all lists halved exactly";
    return {pass, ss.str()};
}

// 7. schedule arithmetic: the ratio inequality for 1000 (eps, p) pairs and
// i_star <= 12/(eps p) when Lambda_0 = (1+eps) d.
Outcome criterion7() {
    Rng rng(424242);
    long long ratio_failures = 0, istar_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const double eps = 0.1 + 0.9 * rng.uniform01();
        // log-uniform p in [0.0015, 0.2] (d = e^{1/p} must stay finite)
        const double p = 0.0015 * std::pow(0.2 / 0.0015, rng.uniform01());
        const double lhs = (1.0 - p / (1.0 + 3.0 * eps / 4.0)) / (1.0 - p / (1.0 + eps / 4.0));
        if (!(lhs >= 1.0 + eps * p / 4.0)) ++ratio_failures;
        const double d = std::exp(1.0 / p);
        const Schedule s = build_schedule(d, (1.0 + eps) * d, eps);
        if (!(static_cast<double>(s.i_star) <= 12.0 / (eps * p))) ++istar_failures;
    }
    std::ostringstream ss;
    ss << "1000 pairs, " << ratio_failures << " ratio failures, " << istar_failures
       << " i_star bound failures";
    return {ratio_failures == 0 && istar_failures == 0, ss.str()};
}

// 8. end-to-end pipeline on 20 seeded 200-part single-conflict instances
// (lists 30, avg colour degree ~ 20): verified transversal in >= 95% of
// seeds, every run < 120 s.
Outcome criterion8() {
    int found = 0;
    double max_wall = 0;
    std::ostringstream notes;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const MultigraphSpec base = gen_random_multigraph(200, 60000, 100000 + seed);
        const CoverInstance g = gen_single_conflict(base, 30, 200000 + seed);
        const InstanceStats st = stats(g);
        const double d = to_double(st.max_avg_colour_degree);
        const double eps = 30.0 / d - 1.0;
        const double gamma = static_cast<double>(st.max_colour_multiplicity) / d;
        PipelineBudgets budgets;
        budgets.halving_max_attempts = 64;
        budgets.nibble_max_attempts = 256;
        budgets.finisher_max_resamples = 1'000'000;
        const auto t0 = std::chrono::steady_clock::now();
        const PipelineResult res = run_pipeline(g, eps, gamma, 300000 + seed, budgets);
        const double wall = seconds_since(t0);
        max_wall = std::max(max_wall, wall);
        if (wall >= 120.0) notes << "[seed " << seed << " took " << wall << " s] ";
        if (res.status == PipelineResult::Status::found &&
            is_independent_transversal(g, res.colouring)) {
            ++found;
        } else {
            notes << "[seed " << seed << " failed at " << res.failed_stage << "] ";
        }
    }
    std::ostringstream ss;
    ss << found << "/20 verified, max wall " << max_wall << " s " << notes.str();
    return {found >= 19 && max_wall < 120.0, ss.str()};
}

// 9. finisher validity: on 50 instances with Lambda >= 4 ceil(avg degree),
// 100% success within 1e6 resamples and 100% verified.
Outcome criterion9() {
    int found = 0, verified = 0, eligible = 0;
    std::ostringstream notes;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const CoverInstance g = gen_random_cover(30, 24, 0.005, 1.0, 2, 40000 + i);
        const InstanceStats st = stats(g);
        const long long ceil_d = (st.max_avg_colour_degree.numerator() +
                                  st.max_avg_colour_degree.denominator() - 1) /
                                 st.max_avg_colour_degree.denominator();
        if (24 < 4 * ceil_d) {
            notes << "[i=" << i << " instance misses Lambda >= 4*ceil(d)] ";
            continue;
        }
        ++eligible;
        FinisherParams params;
        params.seed = 50000 + i;
        params.max_resamples = 1'000'000;
        params.enforce_precondition = true;
        const FinisherResult res = finish(g, params);
        if (res.status == FinisherResult::Status::found) {
            ++found;
            verified += is_independent_transversal(g, res.colouring);
        } else {
            notes << "[i=" << i << " hit the resample limit] ";
        }
    }
    std::ostringstream ss;
    ss << found << "/" << eligible << " found, " << verified << " verified " << notes.str();
    return {eligible == 50 && found == 50 && verified == 50, ss.str()};
}

// 10. EGL generator: avg colour degree <= (n-1)/k, exactly, on 100 seeds.
Outcome criterion10() {
    long long failures = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Rng meta(777 + i);
        const int n = 3 + meta.uniform_int(10);
        const int k = 1 + meta.uniform_int(4);
        const double prob = 0.25 + 0.75 * meta.uniform01();
        const CoverInstance g = gen_egl(n, k, prob, 60000 + i);
        if (!(stats(g).max_avg_colour_degree <= Rational(n - 1, k))) ++failures;
        if (!validate(g).empty()) ++failures;
    }
    std::ostringstream ss;
    ss << "100 seeds, " << failures << " bound violations";
    return {failures == 0, ss.str()};
}

}  // namespace

int main() {
    using CriterionFn = Outcome (*)();
    const std::vector<std::pair<std::string, CriterionFn>> criteria = {
        {"oracle equivalence vs naive enumeration", criterion1},
        {"list-colouring bijection", criterion2},
        {"Keep formula on TINY1 (1e5 trials)", criterion3},
        {"expectation bound and MC agreement", criterion4},
        {"round identities (1e4 rounds)", criterion5},
        {"halving conclusions (50 instances)", criterion6},
        {"schedule arithmetic (1000 pairs)", criterion7},
        {"end-to-end pipeline (20 seeds)", criterion8},
        {"finisher validity (50 instances)", criterion9},
        {"EGL degree bound (100 seeds)", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome out = criteria[i].second();
        failures += !out.pass;
        std::printf("criterion %2zu [%s] %s: %s\n", i + 1, out.pass ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
