#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "bcgsemo/harness.hpp"

using namespace bcgsemo;

TEST_CASE("derive_seed is pure and collision-free across a sweep") {
    CHECK(derive_seed(1, 24, 2, 1, 1, 0, 0) == derive_seed(1, 24, 2, 1, 1, 0, 0));
    CHECK(derive_seed(1, 24, 2, 1, 1, 0, 0) != derive_seed(1, 24, 2, 1, 1, 0, 1));
    CHECK(derive_seed(1, 24, 2, 1, 1, 0, 0) != derive_seed(2, 24, 2, 1, 1, 0, 0));
    CHECK(derive_seed(1, 24, 2, 1, 1, 0, 0) != derive_seed(1, 24, 2, 1, 2, 1000, 0));

    std::set<std::uint64_t> seen;
    for (std::uint64_t n : {24u, 120u, 240u, 360u, 480u, 600u, 720u, 840u})
        for (std::uint64_t k : {2u, 3u, 4u})
            for (std::uint64_t r : {1u, 2u, 4u})
                for (std::uint64_t algo : {1u, 2u})
                    for (std::uint64_t run = 0; run < 30; ++run)
                        seen.insert(derive_seed(1, n, k, r, algo, algo == 1 ? 0 : 1000, run));
    CHECK(seen.size() == 8u * 3u * 3u * 2u * 30u); // 4320 distinct seeds
}

TEST_CASE("summarize") {
    RawRow base{240, 2, 1, Algorithm::Gsemo, 0, 1, 0, 0, true, 4};

    SUBCASE("single run: mean = evaluations, stderr = 0") {
        RawRow row = base;
        row.evaluations = 512;
        const auto cells = summarize({row});
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].runs == 1);
        CHECK(cells[0].mean_evals == doctest::Approx(512.0));
        CHECK(cells[0].stderr_evals == doctest::Approx(0.0));
        CHECK_FALSE(cells[0].censored);
    }

    SUBCASE("runs {100, 300}: mean 200, stderr 100") {
        RawRow a = base;
        a.evaluations = 100;
        RawRow b = base;
        b.run_index = 1;
        b.evaluations = 300;
        const auto cells = summarize({a, b});
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].mean_evals == doctest::Approx(200.0));
        CHECK(cells[0].stderr_evals == doctest::Approx(100.0));
    }

    SUBCASE("any budget-hit run flags the cell censored") {
        RawRow a = base;
        a.evaluations = 100;
        RawRow b = base;
        b.run_index = 1;
        b.evaluations = 1000;
        b.covered = false; // hit the budget
        const auto cells = summarize({a, b});
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].budget_hits == 1);
        CHECK(cells[0].censored);
        CHECK(cells[0].mean_evals == doctest::Approx(550.0)); // clamped-at-budget mean
    }

    SUBCASE("distinct cells are grouped separately") {
        RawRow a = base;
        RawRow b = base;
        b.algorithm = Algorithm::BcGsemo;
        b.t_epoch = 1000;
        const auto cells = summarize({a, b});
        CHECK(cells.size() == 2);
    }
}

TEST_CASE("run_sweep row accounting and determinism") {
    SweepConfig cfg;
    cfg.n_values = {8};
    cfg.k_values = {2};
    cfg.r_values = {1};
    cfg.algorithms = {Algorithm::Gsemo, Algorithm::BcGsemo};
    cfg.t_epoch = 10;
    cfg.runs_per_cell = 30;
    cfg.base_seed = 77;
    cfg.budget = 1'000'000;
    cfg.jobs = 2;

    const SweepOutput first = run_sweep(cfg);
    CHECK(first.raw.size() == 60);
    CHECK(first.summaries.size() == 2);
    CHECK(first.notices.empty());
    for (const RawRow& row : first.raw) {
        CHECK(row.covered);
        CHECK(row.final_pop_size <= 4); // 2^k
    }
    for (std::size_t i = 1; i < first.raw.size(); ++i) {
        const RawRow& a = first.raw[i - 1];
        const RawRow& b = first.raw[i];
        const auto key = [](const RawRow& r) {
            return std::tuple(r.n, r.k, r.r, algorithm_token(r.algorithm), r.run_index);
        };
        CHECK(key(a) < key(b));
    }

    const SweepOutput second = run_sweep(cfg);
    std::ostringstream raw_a, raw_b, sum_a, sum_b;
    write_raw_csv(raw_a, first.raw);
    write_raw_csv(raw_b, second.raw);
    write_summary_csv(sum_a, first.summaries);
    write_summary_csv(sum_b, second.summaries);
    CHECK(raw_a.str() == raw_b.str());
    CHECK(sum_a.str() == sum_b.str());

    // Parallelism must not affect the output bytes.
    SweepConfig serial = cfg;
    serial.jobs = 1;
    const SweepOutput third = run_sweep(serial);
    std::ostringstream raw_c;
    write_raw_csv(raw_c, third.raw);
    CHECK(raw_a.str() == raw_c.str());
}

TEST_CASE("invalid cells are skipped with a notice") {
    SweepConfig cfg;
    cfg.n_values = {8, 9};
    cfg.k_values = {2};
    cfg.r_values = {1, 4};
    cfg.algorithms = {Algorithm::Gsemo};
    cfg.runs_per_cell = 1;
    cfg.budget = 100000;
    cfg.jobs = 1;

    const SweepOutput output = run_sweep(cfg);
    // Valid cells: (8,2,1) only. (9,2,*) fails divisibility; (8,2,4) has r >= l.
    CHECK(output.raw.size() == 1);
    CHECK(output.notices.size() == 3);
}

TEST_CASE("CSV headers are pinned") {
    CHECK(std::string(kRawCsvHeader) ==
          "n,k,r,algo,t_epoch,seed,run_index,evaluations,covered,final_pop_size");
    CHECK(std::string(kSummaryCsvHeader) ==
          "n,k,r,algo,t_epoch,runs,mean_evals,stderr_evals,budget_hits,censored");

    RawRow row{24, 2, 1, Algorithm::BcGsemo, 1000, 42, 3, 512, true, 4};
    CHECK(format_raw_row(row) == "24,2,1,bc-gsemo,1000,42,3,512,1,4");

    std::ostringstream out;
    write_raw_csv(out, {row});
    CHECK(out.str() == "# generator=mt19937_64\n"
                       "n,k,r,algo,t_epoch,seed,run_index,evaluations,covered,final_pop_size\n"
                       "24,2,1,bc-gsemo,1000,42,3,512,1,4\n");
}

TEST_CASE("sweep config parsing") {
    std::istringstream in("# comment\n"
                          "n = 24, 120\n"
                          "k = 2,3\n"
                          "r = 1\n"
                          "algos = gsemo, bc-gsemo\n"
                          "t_epoch = 1000\n"
                          "runs = 30\n"
                          "base_seed = 9\n"
                          "budget = 1000000000\n"
                          "jobs = 2\n");
    const SweepConfig cfg = parse_sweep_config(in);
    CHECK(cfg.n_values == std::vector<std::uint64_t>{24, 120});
    CHECK(cfg.k_values == std::vector<std::uint64_t>{2, 3});
    CHECK(cfg.r_values == std::vector<std::uint64_t>{1});
    REQUIRE(cfg.algorithms.size() == 2);
    CHECK(cfg.algorithms[0] == Algorithm::Gsemo);
    CHECK(cfg.algorithms[1] == Algorithm::BcGsemo);
    CHECK(cfg.t_epoch == 1000);
    CHECK(cfg.runs_per_cell == 30);
    CHECK(cfg.base_seed == 9);
    CHECK(cfg.budget == 1000000000);
    CHECK(cfg.jobs == 2);

    std::istringstream bad_key("frobnicate = 3\n");
    CHECK_THROWS_AS(parse_sweep_config(bad_key), std::invalid_argument);
    std::istringstream bad_value("n = seven\n");
    CHECK_THROWS_AS(parse_sweep_config(bad_value), std::invalid_argument);
}
