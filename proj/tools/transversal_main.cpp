// transversal: batch front-end for cover-graph experiments.
//
// Subcommands: validate, stats, generate, reduce, nibble, solve, verify.
// Exit codes: 0 success, 1 domain failure (no transversal / attempts
// exhausted / invalid instance), 2 usage or format errors. Stochastic
// subcommands require an explicit --seed so runs are replayable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "transversal/transversal.hpp"

namespace {

using namespace transversal;
using nlohmann::json;

int log_level() {
    const char* env = std::getenv("TRANSVERSAL_LOG");
    if (!env) return 0;
    const std::string v = env;
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void emit_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

int cmd_validate(const std::string& path) {
    const CoverInstance g = read_instance(path, /*must_be_valid=*/false);
    const auto violations = validate(g);
    json arr = json::array();
    for (const auto& v : violations) arr.push_back({{"rule", v.rule}, {"detail", v.detail}});
    std::cout << json{{"violations", arr}}.dump(2) << "\n";
    return violations.empty() ? 0 : 1;
}

int cmd_stats(const std::string& path) {
    const CoverInstance g = read_instance(path);
    std::cout << stats_to_json(stats(g)).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& col_path) {
    const CoverInstance g = read_instance(inst_path);
    const PartialColouring phi = colouring_from_json(read_json_file(col_path), g.num_parts());
    if (!phi.is_total()) {
        emit_error("not-a-transversal", "colouring is not total");
        return 1;
    }
    std::pair<ColourRef, ColourRef> witness;
    if (find_violated_edge(g, phi, &witness)) {
        emit_error("not-a-transversal",
                   "conflict edge joins chosen colours (" + std::to_string(witness.first.part) +
                       "," + std::to_string(witness.first.slot) + ")-(" +
                       std::to_string(witness.second.part) + "," +
                       std::to_string(witness.second.slot) + ")");
        return 1;
    }
    std::cout << json{{"ok", true}}.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent transversals in vertex-partitioned cover graphs"};
    app.require_subcommand(1);

    std::string in_path, out_path, report_path, colouring_path, trace_path;
    std::uint64_t seed = 0;
    bool strict = false, adaptive = false;
    int jobs = 1;
    double epsilon = 0.5, gamma = 0.1, p = 0.1, d = 0, Lambda = 0, pair_edge_prob = 1.0;
    double edge_prob = 0.1, base_density = 1.0;
    long long trials = 1000, max_attempts = 1000, max_resamples = 1'000'000, max_nodes = 0;
    long long multi_edges = 0;
    int parts = 10, list_size = 4, mu_cap = 1, egl_n = 5, egl_k = 2, palette = 6;
    std::string family, engine = "exact";

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_flag("--strict", strict, "enforce the asymptotic hypotheses and thresholds");
        cmd->add_flag("--adaptive", adaptive, "record achieved values instead of failing (default)");
    };

    auto* c_validate = app.add_subcommand("validate", "check instance invariants");
    c_validate->add_option("instance", in_path)->required();

    auto* c_stats = app.add_subcommand("stats", "print instance statistics");
    c_stats->add_option("instance", in_path)->required();

    auto* c_generate = app.add_subcommand("generate", "generate an instance");
    c_generate->add_option("--family", family, "random_cover|list_cover|single_conflict|egl")
        ->required();
    c_generate->add_option("--seed", seed)->required();
    c_generate->add_option("--out", out_path)->required();
    c_generate->add_option("--parts", parts);
    c_generate->add_option("--list-size", list_size);
    c_generate->add_option("--edge-prob", edge_prob);
    c_generate->add_option("--base-density", base_density);
    c_generate->add_option("--mu-cap", mu_cap);
    c_generate->add_option("--edges", multi_edges, "edge draws for single_conflict base");
    c_generate->add_option("--n", egl_n);
    c_generate->add_option("--k", egl_k);
    c_generate->add_option("--pair-edge-prob", pair_edge_prob);
    c_generate->add_option("--palette", palette);

    auto* c_reduce = app.add_subcommand("reduce", "phase-1 list reduction");
    c_reduce->add_option("instance", in_path)->required();
    c_reduce->add_option("--epsilon", epsilon)->required();
    c_reduce->add_option("--gamma", gamma)->required();
    c_reduce->add_option("--d", d, "degree budget (default: measured avg colour degree)");
    c_reduce->add_option("--seed", seed)->required();
    c_reduce->add_option("--max-attempts", max_attempts);
    c_reduce->add_option("--trace", trace_path);
    c_reduce->add_option("--out", out_path);
    add_mode(c_reduce);

    auto* c_nibble = app.add_subcommand("nibble", "Monte Carlo rounds of the wasteful colouring");
    c_nibble->add_option("instance", in_path)->required();
    c_nibble->add_option("--p", p)->required();
    c_nibble->add_option("--epsilon", epsilon)->required();
    c_nibble->add_option("--d", d)->required();
    c_nibble->add_option("--lambda", Lambda, "list size parameter (default: max list size)");
    c_nibble->add_option("--trials", trials)->required();
    c_nibble->add_option("--seed", seed)->required();
    c_nibble->add_option("--out", out_path, "per-trial CSV");
    c_nibble->add_option("--jobs", jobs);
    add_mode(c_nibble);

    auto* c_solve = app.add_subcommand("solve", "find an independent transversal");
    c_solve->add_option("instance", in_path)->required();
    c_solve->add_option("--engine", engine, "exact|lll|pipeline")->required();
    c_solve->add_option("--seed", seed);
    c_solve->add_option("--max-nodes", max_nodes);
    c_solve->add_option("--max-resamples", max_resamples);
    c_solve->add_option("--max-attempts", max_attempts);
    c_solve->add_option("--epsilon", epsilon);
    c_solve->add_option("--gamma", gamma);
    c_solve->add_option("--report", report_path);
    c_solve->add_option("--out", out_path, "write the colouring JSON here too");
    add_mode(c_solve);

    auto* c_verify = app.add_subcommand("verify", "check a colouring file");
    c_verify->add_option("instance", in_path)->required();
    c_verify->add_option("colouring", colouring_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) return cmd_validate(in_path);
        if (c_stats->parsed()) return cmd_stats(in_path);

        if (c_generate->parsed()) {
            CoverInstance g;
            if (family == "random_cover") {
                g = gen_random_cover(parts, list_size, edge_prob, base_density, mu_cap, seed);
            } else if (family == "list_cover") {
                g = build_list_cover(
                    gen_random_list_assignment(parts, base_density, list_size, palette, seed));
            } else if (family == "single_conflict") {
                const long long draws = multi_edges > 0 ? multi_edges : 2LL * parts;
                g = gen_single_conflict(gen_random_multigraph(parts, draws, splitmix64(seed)),
                                        list_size, seed);
            } else if (family == "egl") {
                g = gen_egl(egl_n, egl_k, pair_edge_prob, seed);
            } else {
                emit_error("usage", "unknown family: " + family);
                return 2;
            }
            write_instance(out_path, g);
            std::cout << json{{"digest", digest(g)}, {"stats", stats_to_json(stats(g))}}.dump(2)
                      << "\n";
            log_info("wrote " + out_path);
            return 0;
        }

        if (c_reduce->parsed()) {
            const CoverInstance g = read_instance(in_path);
            const InstanceStats s = stats(g);
            const double budget = c_reduce->count("--d") ? d : to_double(s.max_avg_colour_degree);
            ReduceResult res = reduce(g, epsilon, gamma, budget, seed, max_attempts, strict);
            if (!trace_path.empty()) {
                json steps = json::array();
                for (const auto& st : res.trace.steps)
                    steps.push_back({{"d", st.d},
                                     {"s", st.s},
                                     {"mu", st.mu},
                                     {"attempts_used", st.attempts_used}});
                const json jt{{"gamma", res.trace.gamma},
                              {"j", res.trace.j},
                              {"s0", res.trace.s0},
                              {"steps", steps},
                              {"final_stats", stats_to_json(res.trace.final_stats)},
                              {"cond_degree_bound", res.trace.cond_degree_bound},
                              {"cond_mu_upper", res.trace.cond_mu_upper},
                              {"cond_mu_lower", res.trace.cond_mu_lower}};
                write_text(trace_path, jt.dump(2) + "\n");
            }
            if (res.status == ReduceResult::Status::attempts_exhausted)
                throw DomainFailure("reduce: attempts exhausted");
            if (!out_path.empty()) write_instance(out_path, res.instance);
            std::cout << json{{"outcome", res.status == ReduceResult::Status::shortcut
                                              ? "shortcut"
                                              : "reduced"},
                              {"stats", stats_to_json(stats(res.instance))}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (c_nibble->parsed()) {
            const CoverInstance g = read_instance(in_path);
            NibbleParams pr;
            pr.p = p;
            pr.epsilon = epsilon;
            pr.d = d;
            pr.Lambda = c_nibble->count("--lambda") ? Lambda
                                                    : static_cast<double>(g.max_list_size());
            pr.seed = seed;
            pr.strict = strict;
            validate_params(pr);
            const RoundExpectations expect = compute_expectations(g, pr);

            std::ofstream csv;
            if (!out_path.empty()) {
                csv.open(out_path);
                if (!csv) throw std::runtime_error("cannot open for writing: " + out_path);
                csv << "trial,part,useable_cols,expected_useable,bad_events,omega_star\n";
            }
            if (csv.is_open()) {
                for (long long t = 0; t < trials; ++t) {
                    Rng rng = Rng::substream(pr.seed, static_cast<std::uint64_t>(t));
                    const WastefulColouring w = sample_wasteful(g, pr, rng);
                    NibbleRoundReport r = evaluate_round(g, w, pr);
                    const auto events = detect_bad_events(g, r, pr, expect);
                    std::vector<std::string> per_part(g.num_parts());
                    for (const auto& e : events) {
                        std::string tag = bad_event_name(e.kind);
                        if (e.slot >= 0) tag += ":" + std::to_string(e.slot);
                        auto& cell = per_part[e.part];
                        cell += (cell.empty() ? "" : "|") + tag;
                    }
                    for (int v = 0; v < g.num_parts(); ++v)
                        csv << t << "," << v << "," << r.useable_cols[v] << ","
                            << expect.expected_useable[v] << "," << per_part[v] << ","
                            << static_cast<int>(r.omega_star[v]) << "\n";
                }
            }

            MonteCarloOptions opts;
            opts.jobs = jobs;
            const EstimateReport rep = monte_carlo_check(g, pr, trials, opts);
            json parts_json = json::array();
            for (int v = 0; v < g.num_parts(); ++v) {
                const auto& pe = rep.parts[v];
                parts_json.push_back({{"part", v},
                                      {"mean_useable", pe.mean_useable},
                                      {"se_useable", pe.se_useable},
                                      {"expected_useable", pe.expected_useable},
                                      {"keep_formula_sum", pe.keep_formula_sum},
                                      {"paper_lower_bound", pe.paper_lower_bound},
                                      {"omega_star_count", pe.omega_star_count}});
            }
            std::cout << json{{"trials", rep.trials},
                              {"parts", parts_json},
                              {"bad_event_trials",
                               {{"A_v", rep.event_trials[0]},
                                {"A_vc", rep.event_trials[1]},
                                {"A_prime_v", rep.event_trials[2]}}}}
                             .dump(2)
                      << "\n";
            return 0;
        }

        if (c_solve->parsed()) {
            const CoverInstance g = read_instance(in_path);
            PartialColouring phi;
            json extra;
            if (engine == "exact") {
                SearchBudget budget;
                if (max_nodes > 0) budget.max_nodes = max_nodes;
                const FindResult res = find_transversal_exact(g, budget);
                extra["nodes"] = res.nodes;
                if (res.status == FindResult::Status::budget_exhausted)
                    throw DomainFailure("exact search: budget exhausted");
                if (res.status == FindResult::Status::none)
                    throw DomainFailure("no independent transversal exists");
                phi = res.colouring;
            } else if (engine == "lll") {
                if (!c_solve->count("--seed")) {
                    emit_error("usage", "--seed is required for stochastic engines");
                    return 2;
                }
                FinisherParams fp;
                fp.max_resamples = max_resamples;
                fp.seed = seed;
                fp.enforce_precondition = strict;
                const FinisherResult res = finish(g, fp);
                extra["resamples"] = res.resamples;
                if (res.status != FinisherResult::Status::found)
                    throw DomainFailure("lll finisher: resample limit reached");
                phi = res.colouring;
            } else if (engine == "pipeline") {
                if (!c_solve->count("--seed")) {
                    emit_error("usage", "--seed is required for stochastic engines");
                    return 2;
                }
                PipelineBudgets budgets;
                budgets.nibble_max_attempts = max_attempts;
                budgets.halving_max_attempts = max_attempts;
                budgets.finisher_max_resamples = max_resamples;
                const PipelineResult res = run_pipeline(g, epsilon, gamma, seed, budgets, strict);
                if (!report_path.empty())
                    write_text(report_path, run_report_to_json(res.report).dump(2) + "\n");
                if (res.status != PipelineResult::Status::found)
                    throw DomainFailure("pipeline failed at stage: " + res.failed_stage);
                phi = res.colouring;
            } else {
                emit_error("usage", "unknown engine: " + engine);
                return 2;
            }
            const json out = json{{"outcome", "found"},
                                  {"colouring", colouring_to_json(g, phi)["colouring"]},
                                  {"extra", extra}};
            std::cout << out.dump(2) << "\n";
            if (!out_path.empty()) write_text(out_path, colouring_to_json(g, phi).dump(2) + "\n");
            return 0;
        }

        if (c_verify->parsed()) return cmd_verify(in_path, colouring_path);
    } catch (const DomainFailure& e) {
        emit_error("domain", e.what());
        return 1;
    } catch (const json::exception& e) {
        emit_error("format", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error("format", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return 2;
}
