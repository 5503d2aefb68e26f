#ifndef TRANSVERSAL_PIPELINE_HPP
#define TRANSVERSAL_PIPELINE_HPP

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "transversal/cover.hpp"
#include "transversal/io.hpp"
#include "transversal/lll.hpp"
#include "transversal/nibble.hpp"
#include "transversal/phase1.hpp"

namespace transversal {

struct ScheduleStep {
    double d = 0;
    double Lambda = 0;
    double ratio = 0;  // Lambda / d
};

struct Schedule {
    double p = 0;
    int i_star = 0;
    std::vector<ScheduleStep> steps;  // states i = 0..i_star
};

// d_{i+1} = (1 - p/(1+eps/4)) d_i, Lambda_{i+1} = (1 - p/(1+3eps/4)) Lambda_i
// with p = 1/log d, iterated until ceil(Lambda_i)/d_i >= 4. The ratio grows
// by at least 1 + eps p/4 per step, so i_star <= 12/(eps p) when
// Lambda_0 = (1+eps) d.
inline Schedule build_schedule(double d, double Lambda0, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("build_schedule: epsilon must be positive");
    if (!(d > std::exp(1.0)))
        throw std::invalid_argument("build_schedule: need d > e so that p = 1/log d is in (0,1)");
    if (Lambda0 + 1e-9 < (1.0 + epsilon) * d)
        throw std::invalid_argument("build_schedule: need Lambda0 >= (1+epsilon) d");

    Schedule sched;
    sched.p = 1.0 / std::log(d);
    const double lambda_factor = 1.0 - sched.p / (1.0 + 3.0 * epsilon / 4.0);
    const double d_factor = 1.0 - sched.p / (1.0 + epsilon / 4.0);

    double di = d, li = Lambda0;
    sched.steps.push_back({di, li, li / di});
    const long long cap = static_cast<long long>(std::ceil(48.0 / (epsilon * sched.p))) + 16;
    int i = 0;
    while (std::ceil(li) / di < 4.0) {
        if (++i > cap) throw std::logic_error("build_schedule: ratio failed to reach 4");
        di *= d_factor;
        li *= lambda_factor;
        sched.steps.push_back({di, li, li / di});
    }
    sched.i_star = i;
    return sched;
}

struct PipelineBudgets {
    long long halving_max_attempts = 256;
    long long nibble_max_attempts = 512;
    long long finisher_max_resamples = 1'000'000;
};

struct StageRecord {
    std::string name;
    long long attempts = 0;
    double wall_seconds = 0;
    InstanceStats before, after;
    std::string note;
};

struct RunReport {
    std::string instance_digest;
    Schedule schedule;
    std::vector<StageRecord> stages;
    std::string outcome;       // "found" | "failed"
    std::string failed_stage;  // empty when found
    std::vector<std::pair<int, int>> colouring;  // original (part, slot), assigned so far
};

struct PipelineResult {
    enum class Status { found, failed } status = Status::failed;
    std::string failed_stage;
    PartialColouring colouring;  // on the original instance
    RunReport report;
};

// Full two-phase driver: Phase-1 reduce, list equalization, scheduled nibble
// rounds, then the resampling finisher; partial colourings are stitched
// through the composed slot maps and verified against the original instance.
// Adaptive mode re-measures after Phase 1 and after every round, stopping
// the nibble stage once the measured ratio reaches 4; strict mode follows
// the schedule for i_star rounds and aborts on the first stage failure.
inline PipelineResult run_pipeline(const CoverInstance& g, double epsilon, double gamma,
                                   std::uint64_t seed, const PipelineBudgets& budgets = {},
                                   bool strict = false) {
    using clock = std::chrono::steady_clock;
    const InstanceStats s0 = stats(g);
    const double d0 = to_double(s0.max_avg_colour_degree);
    if (static_cast<double>(s0.min_list_size) + 1e-9 < (1.0 + epsilon) * d0)
        throw std::invalid_argument("run_pipeline: need |L(v)| >= (1+epsilon) * avg colour degree");
    if (static_cast<double>(s0.max_colour_multiplicity) > gamma * d0 + 1e-9)
        throw std::invalid_argument("run_pipeline: multiplicity exceeds gamma * avg colour degree");

    if (!(epsilon > 0.0)) throw std::invalid_argument("run_pipeline: epsilon must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("run_pipeline: gamma must be positive");

    PipelineResult out;
    out.report.instance_digest = digest(g);
    out.colouring = PartialColouring(g.num_parts());

    CoverInstance current = g;
    InstanceMaps to_original = identity_maps(g);

    auto fail = [&](const std::string& stage) {
        out.status = PipelineResult::Status::failed;
        out.failed_stage = stage;
        out.report.outcome = "failed";
        out.report.failed_stage = stage;
        for (int v = 0; v < g.num_parts(); ++v)
            if (out.colouring.is_assigned(v))
                out.report.colouring.push_back({v, out.colouring.slot(v)});
        return out;
    };
    auto record = [&](StageRecord rec) { out.report.stages.push_back(std::move(rec)); };

    // Phase 1; skipped when the average colour degree is at most 1 (the trim
    // threshold d sqrt(log d) needs d > 1 and there is nothing to reduce).
    if (d0 > 1.0) {
        StageRecord rec{"phase1"};
        rec.before = s0;
        const auto t0 = clock::now();
        ReduceResult red;
        bool threw = false;
        std::string why;
        try {
            red = reduce(current, epsilon, gamma, d0, splitmix64(seed) + 1,
                         budgets.halving_max_attempts, strict);
        } catch (const std::exception& e) {
            threw = true;
            why = e.what();
        }
        rec.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        if (threw || red.status == ReduceResult::Status::attempts_exhausted) {
            rec.note = threw ? why : "attempts exhausted";
            record(std::move(rec));
            return fail("phase1");
        }
        for (const auto& step : red.trace.steps) rec.attempts += step.attempts_used;
        rec.note = red.status == ReduceResult::Status::shortcut ? "shortcut" : "reduced";
        current = std::move(red.instance);
        to_original = red.maps;
        rec.after = stats(current);
        record(std::move(rec));
    } else {
        StageRecord rec{"phase1"};
        rec.before = rec.after = s0;
        rec.note = "skipped (avg colour degree <= 1)";
        record(std::move(rec));
    }

    // Desk-scale fallback: when the halvings leave lists too small to carry
    // any slack (fewer than 2 colours, or no list/degree headroom), discard
    // them and keep only Phase 1's trim step. The asymptotic reduction
    // guarantees |L'| >= (1 + eps/2) d'; when the achieved instance misses
    // it this badly the adaptive driver continues with achieved parameters.
    if (!strict && d0 > 1.0) {
        const InstanceStats sr = stats(current);
        const double dr = to_double(sr.max_avg_colour_degree);
        if (sr.min_list_size < 2 || (dr > 0.0 && static_cast<double>(sr.min_list_size) <= dr)) {
            DerivedInstance trimmed = trim_high_degree(g, d0);
            current = std::move(trimmed.instance);
            to_original = trimmed.maps;
            StageRecord rec{"phase1_fallback"};
            rec.before = sr;
            rec.after = stats(current);
            rec.note = "halved lists unusable; kept the trim-only reduction";
            record(std::move(rec));
        }
    }

    // Re-measure and equalize lists
    InstanceStats s1 = stats(current);
    double d1 = to_double(s1.max_avg_colour_degree);
    if (d1 > 0.0 && s1.min_list_size != s1.max_list_size) {
        std::vector<int> targets(current.num_parts(), s1.min_list_size);
        DerivedInstance eq = truncate_lists(current, targets);
        current = std::move(eq.instance);
        to_original = compose(to_original, eq.maps);
        s1 = stats(current);
        d1 = to_double(s1.max_avg_colour_degree);
    }

    // Schedule on measured values
    int rounds_to_run = 0;
    if (d1 == 0.0 || static_cast<double>(s1.min_list_size) / d1 >= 4.0) {
        out.report.schedule.i_star = 0;  // finisher precondition already met
    } else {
        const double eps1 = static_cast<double>(s1.min_list_size) / d1 - 1.0;
        if (eps1 <= 0.0 || d1 <= std::exp(1.0)) {
            if (strict) {
                StageRecord rec{"schedule"};
                rec.before = rec.after = s1;
                rec.note = eps1 <= 0.0 ? "measured epsilon <= 0" : "measured d too small";
                record(std::move(rec));
                return fail("schedule");
            }
            StageRecord rec{"schedule"};
            rec.before = rec.after = s1;
            rec.note = "skipped (measured shortfall), proceeding to finisher";
            record(std::move(rec));
        } else {
            out.report.schedule = build_schedule(d1, static_cast<double>(s1.min_list_size), eps1);
            rounds_to_run = out.report.schedule.i_star;
        }
    }

    // Nibble rounds
    for (int i = 1; i <= rounds_to_run; ++i) {
        if (current.num_parts() == 0) break;
        const InstanceStats before = stats(current);
        if (!strict) {
            const double dm = to_double(before.max_avg_colour_degree);
            if (dm == 0.0 || static_cast<double>(before.min_list_size) / dm >= 4.0) break;
        }
        const ScheduleStep& step = out.report.schedule.steps[i - 1];
        if (!strict) {
            // a round that would truncate every list to a single colour has
            // left the schedule's domain; hand over to the finisher instead
            const double next_target = std::ceil(
                (1.0 - out.report.schedule.p / (1.0 + 3.0 * (s1.min_list_size / d1 - 1.0) / 4.0)) *
                step.Lambda);
            if (next_target <= 1.0) break;
        }
        NibbleParams pr;
        pr.p = out.report.schedule.p;
        pr.epsilon = static_cast<double>(s1.min_list_size) / d1 - 1.0;
        pr.d = step.d;
        pr.Lambda = step.Lambda;
        pr.seed = splitmix64(seed) + 1000 + static_cast<std::uint64_t>(i);
        pr.max_attempts = budgets.nibble_max_attempts;
        pr.strict = strict;

        StageRecord rec{"nibble_round_" + std::to_string(i)};
        rec.before = before;
        const auto t0 = clock::now();
        NibbleOutcome round;
        bool threw = false;
        std::string why;
        try {
            round = nibble_round(current, pr);
        } catch (const std::exception& e) {
            threw = true;
            why = e.what();
        }
        rec.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        rec.attempts = round.attempts_used;
        if (threw && !strict) {
            // scheduled parameters left the round's domain (e.g. d_i <= 1);
            // stop nibbling and let the finisher take over
            rec.note = "stopped: " + why;
            rec.after = before;
            record(std::move(rec));
            break;
        }
        if (threw || round.status != NibbleOutcome::Status::advanced) {
            rec.note = threw ? why : "attempts exhausted";
            record(std::move(rec));
            return fail(rec.name);
        }
        for (int v = 0; v < current.num_parts(); ++v)
            if (round.colouring.is_assigned(v)) {
                const int orig = to_original.part_map[v];
                if (out.colouring.is_assigned(orig))
                    throw std::logic_error("run_pipeline: stage domains overlap");
                out.colouring.assign(orig, to_original.slot_map[v][round.colouring.slot(v)]);
            }
        current = std::move(round.residual);
        to_original = compose(to_original, round.maps);
        rec.after = stats(current);
        record(std::move(rec));
    }

    // Finisher
    if (current.num_parts() > 0) {
        StageRecord rec{"finisher"};
        rec.before = stats(current);
        FinisherParams fp;
        fp.max_resamples = budgets.finisher_max_resamples;
        fp.seed = splitmix64(seed) + 2;
        fp.enforce_precondition = strict;
        const auto t0 = clock::now();
        FinisherResult fin;
        bool threw = false;
        std::string why;
        try {
            fin = finish(current, fp);
        } catch (const std::invalid_argument& e) {
            threw = true;
            why = e.what();
        }
        rec.wall_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        rec.attempts = fin.resamples;
        if (threw || fin.status != FinisherResult::Status::found) {
            rec.note = threw ? why : "resample limit";
            record(std::move(rec));
            return fail("finisher");
        }
        for (int v = 0; v < current.num_parts(); ++v) {
            const int orig = to_original.part_map[v];
            if (out.colouring.is_assigned(orig))
                throw std::logic_error("run_pipeline: stage domains overlap");
            out.colouring.assign(orig, to_original.slot_map[v][fin.colouring.slot(v)]);
        }
        rec.after = rec.before;
        rec.note = "found";
        record(std::move(rec));
    }

    if (!is_independent_transversal(g, out.colouring))
        throw std::logic_error("run_pipeline: stitched colouring failed verification");
    out.status = PipelineResult::Status::found;
    out.report.outcome = "found";
    for (int v = 0; v < g.num_parts(); ++v)
        out.report.colouring.push_back({v, out.colouring.slot(v)});
    return out;
}

inline json schedule_to_json(const Schedule& s) {
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"d", st.d}, {"Lambda", st.Lambda}, {"ratio", st.ratio}});
    return json{{"p", s.p}, {"i_star", s.i_star}, {"steps", steps}};
}

inline json run_report_to_json(const RunReport& r) {
    json stages = json::array();
    for (const auto& st : r.stages)
        stages.push_back({{"name", st.name},
                          {"attempts", st.attempts},
                          {"wall_seconds", st.wall_seconds},
                          {"before", stats_to_json(st.before)},
                          {"after", stats_to_json(st.after)},
                          {"note", st.note}});
    json colouring = json::array();
    for (const auto& [part, slot] : r.colouring) colouring.push_back({part, slot});
    return json{{"instance_digest", r.instance_digest},
                {"schedule", schedule_to_json(r.schedule)},
                {"stages", stages},
                {"outcome", r.outcome},
                {"failed_stage", r.failed_stage},
                {"colouring", colouring}};
}

}  // namespace transversal

#endif
