#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bcgsemo/algorithm.hpp"
#include "bcgsemo/harness.hpp"
#include "bcgsemo/oracle.hpp"
#include "bcgsemo/problem.hpp"
#include "bcgsemo/random_source.hpp"

namespace {

using namespace bcgsemo;

int cmd_run(const std::string& algo, std::uint64_t n, std::uint64_t k, std::uint64_t r,
            std::uint64_t t_epoch, std::uint64_t seed, std::uint64_t budget,
            std::uint64_t trace_every, const std::string& trace_out) {
    RunConfig cfg{ProblemParams(n, k, r)};
    cfg.algorithm = parse_algorithm(algo);
    cfg.t_epoch = t_epoch;
    cfg.seed = seed;
    cfg.budget = budget;

    std::ofstream trace_file;
    if (trace_every > 0) {
        trace_file.open(trace_out);
        if (!trace_file) {
            std::cerr << "error: cannot open trace output file: " << trace_out << "\n";
            return 1;
        }
        trace_file << "# generator=" << RandomSource::algorithm_id << "\n";
        trace_file << "evaluations,archive_size,covered_fraction\n";
        cfg.trace_every = trace_every;
        attach_observer(cfg, [&trace_file](const TraceSample& sample) {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.6f", sample.covered_fraction);
            trace_file << sample.evaluations << ',' << sample.archive_size << ',' << buffer
                       << '\n';
        });
    }

    const RunResult result = run(cfg);
    RawRow row{n,
               k,
               r,
               cfg.algorithm,
               cfg.algorithm == Algorithm::Gsemo ? 0 : t_epoch,
               seed,
               0,
               result.evaluations,
               result.covered,
               result.final_archive.size()};
    std::cout << format_raw_row(row) << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path,
              const std::string& summary_path, const SweepConfig& overrides,
              const std::vector<bool>& overridden) {
    SweepConfig cfg = load_sweep_config(config_path);
    // Flags win over file keys.
    if (overridden[0])
        cfg.n_values = overrides.n_values;
    if (overridden[1])
        cfg.k_values = overrides.k_values;
    if (overridden[2])
        cfg.r_values = overrides.r_values;
    if (overridden[3])
        cfg.algorithms = overrides.algorithms;
    if (overridden[4])
        cfg.t_epoch = overrides.t_epoch;
    if (overridden[5])
        cfg.runs_per_cell = overrides.runs_per_cell;
    if (overridden[6])
        cfg.base_seed = overrides.base_seed;
    if (overridden[7])
        cfg.budget = overrides.budget;
    if (overridden[8])
        cfg.jobs = overrides.jobs;

    // Open both outputs before any run starts.
    std::ofstream raw_file(out_path);
    if (!raw_file) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    std::ofstream summary_file(summary_path);
    if (!summary_file) {
        std::cerr << "error: cannot open summary file: " << summary_path << "\n";
        return 1;
    }

    const SweepOutput output = run_sweep(cfg);
    for (const std::string& notice : output.notices)
        std::cerr << "notice: " << notice << "\n";
    write_raw_csv(raw_file, output.raw);
    write_summary_csv(summary_file, output.summaries);
    std::cout << output.raw.size() << " runs over " << output.summaries.size()
              << " cells written to " << out_path << " / " << summary_path << "\n";
    return 0;
}

int cmd_front(std::uint64_t n, std::uint64_t k, std::uint64_t r) {
    const ProblemParams params(n, k, r);
    std::cout << "f1,f2,witness\n";
    for (const FrontPoint& point : pareto_front(params)) {
        const ScalarObjectives scalars = scalarize(point.key, params);
        std::cout << uint128_to_string(scalars.f1) << ',' << uint128_to_string(scalars.f2) << ','
                  << point.witness.to_string() << "\n";
    }
    return 0;
}

int cmd_verify(std::uint64_t max_n, std::uint64_t pairs, std::uint64_t seed) {
    bool all_passed = true;
    for (const auto& report : oracle::run_verification(max_n, pairs, seed)) {
        std::cout << (report.passed ? "PASS" : "FAIL") << "  " << report.name << ": "
                  << report.detail << "\n";
        all_passed = all_passed && report.passed;
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GSEMO / BC-GSEMO optimizers on the blockwise bi-objective "
                 "leading-ones benchmark family"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "execute a single trial, print one raw CSV row");
    std::string run_algo;
    std::uint64_t run_n = 0, run_k = 0, run_r = 0;
    std::uint64_t run_t_epoch = 1000, run_seed = 0, run_budget = 1'000'000'000;
    std::uint64_t run_trace_every = 0;
    std::string run_trace_out = "trace.csv";
    run_cmd->add_option("--algo", run_algo, "gsemo or bc-gsemo")->required();
    run_cmd->add_option("--n", run_n, "total bits")->required();
    run_cmd->add_option("--k", run_k, "number of blocks")->required();
    run_cmd->add_option("--r", run_r, "trailing-zeros length of the second target")->required();
    run_cmd->add_option("--t-epoch", run_t_epoch, "offspring per block epoch (bc-gsemo)");
    run_cmd->add_option("--seed", run_seed, "rng seed");
    run_cmd->add_option("--budget", run_budget, "max fitness evaluations");
    run_cmd->add_option("--trace-every", run_trace_every, "snapshot period (0 = off)");
    run_cmd->add_option("--trace-out", run_trace_out, "trace CSV path");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run an experiment grid from a config file");
    std::string sweep_config, sweep_out, sweep_summary;
    SweepConfig overrides;
    std::vector<std::string> algo_tokens;
    sweep_cmd->add_option("--config", sweep_config, "sweep config file")->required();
    sweep_cmd->add_option("--out", sweep_out, "raw CSV output path")->required();
    sweep_cmd->add_option("--summary", sweep_summary, "summary CSV output path")->required();
    auto* o_n = sweep_cmd->add_option("--n", overrides.n_values, "override n list");
    auto* o_k = sweep_cmd->add_option("--k", overrides.k_values, "override k list");
    auto* o_r = sweep_cmd->add_option("--r", overrides.r_values, "override r list");
    auto* o_algos = sweep_cmd->add_option("--algos", algo_tokens, "override algorithm list");
    auto* o_te = sweep_cmd->add_option("--t-epoch", overrides.t_epoch, "override t_epoch");
    auto* o_runs = sweep_cmd->add_option("--runs", overrides.runs_per_cell, "override runs per cell");
    auto* o_seed = sweep_cmd->add_option("--base-seed", overrides.base_seed, "override base seed");
    auto* o_budget = sweep_cmd->add_option("--budget", overrides.budget, "override budget");
    auto* o_jobs = sweep_cmd->add_option("--jobs", overrides.jobs, "parallel trials");

    // front
    auto* front_cmd = app.add_subcommand("front", "print the exact Pareto front as CSV");
    std::uint64_t front_n = 0, front_k = 0, front_r = 0;
    front_cmd->add_option("--n", front_n, "total bits")->required();
    front_cmd->add_option("--k", front_k, "number of blocks")->required();
    front_cmd->add_option("--r", front_r, "trailing-zeros length")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle and lemma suite");
    std::uint64_t verify_max_n = 16, verify_pairs = 100000, verify_seed = 20240901;
    verify_cmd->add_option("--max-n", verify_max_n, "largest n for exhaustive checks");
    verify_cmd->add_option("--pairs", verify_pairs, "random pairs per parameter set");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(run_algo, run_n, run_k, run_r, run_t_epoch, run_seed, run_budget,
                           run_trace_every, run_trace_out);
        if (sweep_cmd->parsed()) {
            for (const std::string& token : algo_tokens)
                overrides.algorithms.push_back(parse_algorithm(token));
            const std::vector<bool> overridden{
                o_n->count() > 0,    o_k->count() > 0,    o_r->count() > 0,
                o_algos->count() > 0, o_te->count() > 0,   o_runs->count() > 0,
                o_seed->count() > 0, o_budget->count() > 0, o_jobs->count() > 0};
            return cmd_sweep(sweep_config, sweep_out, sweep_summary, overrides, overridden);
        }
        if (front_cmd->parsed())
            return cmd_front(front_n, front_k, front_r);
        if (verify_cmd->parsed())
            return cmd_verify(verify_max_n, verify_pairs, verify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
