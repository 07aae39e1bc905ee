#include "bcgsemo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bcgsemo/random_source.hpp"
#include "bcgsemo/seed_mix.hpp"

namespace bcgsemo {

const char* const kRawCsvHeader = "n,k,r,algo,t_epoch,seed,run_index,evaluations,covered,final_pop_size";
const char* const kSummaryCsvHeader =
    "n,k,r,algo,t_epoch,runs,mean_evals,stderr_evals,budget_hits,censored";

std::uint64_t algorithm_seed_id(Algorithm a) { return a == Algorithm::Gsemo ? 1 : 2; }

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t n, std::uint64_t k,
                          std::uint64_t r, std::uint64_t algorithm_id, std::uint64_t t_epoch,
                          std::uint64_t run_index) {
    std::uint64_t h = splitmix64(base_seed);
    h = mix_seed(h, n);
    h = mix_seed(h, k);
    h = mix_seed(h, r);
    h = mix_seed(h, algorithm_id);
    h = mix_seed(h, t_epoch);
    h = mix_seed(h, run_index);
    return h;
}

namespace {

struct Cell {
    std::uint64_t n, k, r;
    Algorithm algorithm;
    std::uint64_t t_epoch; // 0 for GSEMO
};

// Deterministic cell order: numeric coordinates first, then algorithm token.
bool cell_less(const Cell& a, const Cell& b) {
    if (a.n != b.n)
        return a.n < b.n;
    if (a.k != b.k)
        return a.k < b.k;
    if (a.r != b.r)
        return a.r < b.r;
    if (a.algorithm != b.algorithm)
        return algorithm_token(a.algorithm) < algorithm_token(b.algorithm);
    return a.t_epoch < b.t_epoch;
}

} // namespace

SweepOutput run_sweep(const SweepConfig& cfg) {
    if (cfg.runs_per_cell == 0)
        throw std::invalid_argument("run_sweep: runs_per_cell must be positive");
    if (cfg.n_values.empty() || cfg.k_values.empty() || cfg.r_values.empty() ||
        cfg.algorithms.empty())
        throw std::invalid_argument("run_sweep: empty value list");

    SweepOutput output;
    std::vector<Cell> cells;
    for (std::uint64_t n : cfg.n_values) {
        for (std::uint64_t k : cfg.k_values) {
            for (std::uint64_t r : cfg.r_values) {
                if (k == 0 || n == 0 || n % k != 0) {
                    std::ostringstream msg;
                    msg << "skipping cell n=" << n << " k=" << k << " r=" << r
                        << ": k does not divide n";
                    output.notices.push_back(msg.str());
                    continue;
                }
                if (r >= n / k) {
                    std::ostringstream msg;
                    msg << "skipping cell n=" << n << " k=" << k << " r=" << r << ": r >= n/k";
                    output.notices.push_back(msg.str());
                    continue;
                }
                try {
                    ProblemParams probe(n, k, r);
                } catch (const std::invalid_argument& e) {
                    std::ostringstream msg;
                    msg << "skipping cell n=" << n << " k=" << k << " r=" << r << ": " << e.what();
                    output.notices.push_back(msg.str());
                    continue;
                }
                for (Algorithm algorithm : cfg.algorithms)
                    cells.push_back(Cell{n, k, r, algorithm,
                                         algorithm == Algorithm::Gsemo ? 0 : cfg.t_epoch});
            }
        }
    }
    std::sort(cells.begin(), cells.end(), cell_less);

    struct Trial {
        Cell cell;
        std::uint32_t run_index;
    };
    std::vector<Trial> trials;
    trials.reserve(cells.size() * cfg.runs_per_cell);
    for (const Cell& cell : cells)
        for (std::uint32_t run = 0; run < cfg.runs_per_cell; ++run)
            trials.push_back(Trial{cell, run});

    output.raw.resize(trials.size());
    const auto execute = [&](std::size_t i) {
        const Trial& trial = trials[i];
        const Cell& cell = trial.cell;
        const std::uint64_t seed =
            derive_seed(cfg.base_seed, cell.n, cell.k, cell.r,
                        algorithm_seed_id(cell.algorithm), cell.t_epoch, trial.run_index);
        RunConfig run_cfg{ProblemParams(cell.n, cell.k, cell.r)};
        run_cfg.algorithm = cell.algorithm;
        run_cfg.t_epoch = cell.algorithm == Algorithm::Gsemo ? 1 : cell.t_epoch;
        run_cfg.budget = cfg.budget;
        run_cfg.seed = seed;
        const RunResult result = run(run_cfg);
        output.raw[i] = RawRow{cell.n,           cell.k,
                               cell.r,           cell.algorithm,
                               cell.t_epoch,     seed,
                               trial.run_index,  result.evaluations,
                               result.covered,   result.final_archive.size()};
    };

    unsigned jobs = cfg.jobs == 0 ? std::thread::hardware_concurrency() : cfg.jobs;
    jobs = std::max(1u, jobs);
    if (jobs == 1 || trials.size() <= 1) {
        for (std::size_t i = 0; i < trials.size(); ++i)
            execute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < trials.size();
                     i = next.fetch_add(1))
                    execute(i);
            });
        }
        for (std::thread& worker : pool)
            worker.join();
    }

    output.summaries = summarize(output.raw);
    return output;
}

std::vector<CellSummary> summarize(const std::vector<RawRow>& rows) {
    std::vector<CellSummary> summaries;
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].n == rows[i].n && rows[j].k == rows[i].k &&
               rows[j].r == rows[i].r && rows[j].algorithm == rows[i].algorithm &&
               rows[j].t_epoch == rows[i].t_epoch)
            ++j;

        CellSummary cell{rows[i].n, rows[i].k, rows[i].r, rows[i].algorithm, rows[i].t_epoch};
        cell.runs = static_cast<std::uint32_t>(j - i);
        double sum = 0.0;
        for (std::size_t t = i; t < j; ++t) {
            sum += static_cast<double>(rows[t].evaluations);
            if (!rows[t].covered)
                ++cell.budget_hits;
        }
        cell.mean_evals = sum / static_cast<double>(cell.runs);
        if (cell.runs > 1) {
            double ssd = 0.0;
            for (std::size_t t = i; t < j; ++t) {
                const double d = static_cast<double>(rows[t].evaluations) - cell.mean_evals;
                ssd += d * d;
            }
            const double sample_sd = std::sqrt(ssd / static_cast<double>(cell.runs - 1));
            cell.stderr_evals = sample_sd / std::sqrt(static_cast<double>(cell.runs));
        }
        cell.censored = cell.budget_hits > 0;
        summaries.push_back(cell);
        i = j;
    }
    return summaries;
}

std::string format_raw_row(const RawRow& row) {
    std::ostringstream out;
    out << row.n << ',' << row.k << ',' << row.r << ',' << algorithm_token(row.algorithm) << ','
        << row.t_epoch << ',' << row.seed << ',' << row.run_index << ',' << row.evaluations << ','
        << (row.covered ? 1 : 0) << ',' << row.final_pop_size;
    return out.str();
}

void write_raw_csv(std::ostream& out, const std::vector<RawRow>& rows) {
    out << "# generator=" << RandomSource::algorithm_id << '\n';
    out << kRawCsvHeader << '\n';
    for (const RawRow& row : rows)
        out << format_raw_row(row) << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summaries) {
    out << "# generator=" << RandomSource::algorithm_id << '\n';
    out << kSummaryCsvHeader << '\n';
    char buffer[64];
    for (const CellSummary& cell : summaries) {
        out << cell.n << ',' << cell.k << ',' << cell.r << ',' << algorithm_token(cell.algorithm)
            << ',' << cell.t_epoch << ',' << cell.runs << ',';
        std::snprintf(buffer, sizeof buffer, "%.4f", cell.mean_evals);
        out << buffer << ',';
        std::snprintf(buffer, sizeof buffer, "%.4f", cell.stderr_evals);
        out << buffer << ',' << cell.budget_hits << ',' << (cell.censored ? 1 : 0) << '\n';
    }
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            items.push_back(item);
    }
    return items;
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(text, &used);
        if (used != text.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("sweep config: bad integer for key '" + key + "': " + text);
    }
}

std::vector<std::uint64_t> parse_u64_list(const std::string& value, const std::string& key) {
    std::vector<std::uint64_t> out;
    for (const std::string& item : split_list(value))
        out.push_back(parse_u64(item, key));
    if (out.empty())
        throw std::invalid_argument("sweep config: empty list for key '" + key + "'");
    return out;
}

} // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    cfg.n_values.clear();
    cfg.k_values.clear();
    cfg.r_values.clear();
    cfg.algorithms.clear();

    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sweep config: expected 'key = value': " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "n")
            cfg.n_values = parse_u64_list(value, key);
        else if (key == "k")
            cfg.k_values = parse_u64_list(value, key);
        else if (key == "r")
            cfg.r_values = parse_u64_list(value, key);
        else if (key == "algos") {
            for (const std::string& token : split_list(value))
                cfg.algorithms.push_back(parse_algorithm(token));
        } else if (key == "t_epoch")
            cfg.t_epoch = parse_u64(value, key);
        else if (key == "runs")
            cfg.runs_per_cell = static_cast<std::uint32_t>(parse_u64(value, key));
        else if (key == "base_seed")
            cfg.base_seed = parse_u64(value, key);
        else if (key == "budget")
            cfg.budget = parse_u64(value, key);
        else if (key == "jobs")
            cfg.jobs = static_cast<unsigned>(parse_u64(value, key));
        else
            throw std::invalid_argument("sweep config: unknown key '" + key + "'");
    }

    if (cfg.algorithms.empty()) {
        cfg.algorithms = {Algorithm::Gsemo, Algorithm::BcGsemo};
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open sweep config: " + path);
    return parse_sweep_config(in);
}

} // namespace bcgsemo
