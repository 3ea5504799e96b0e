#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "accs/csv.hpp"
#include "accs/experiment.hpp"
#include "accs/fixture.hpp"
#include "accs/stats.hpp"

using namespace accs;

namespace {

const std::filesystem::path kDataDir = ACCS_DATA_DIR;

ExperimentConfig small_config() {
    ExperimentConfig config;
    config.algorithms = {"accs"};
    config.functions = {"F1"};
    config.runs = 3;
    config.root_seed = 42;
    config.accs.pop_size = 6;
    config.accs.max_iterations = 20;
    return config;
}

bool records_equal_ignoring_time(const RunRecord& a, const RunRecord& b) {
    return a.algorithm == b.algorithm && a.function == b.function && a.run_index == b.run_index &&
           a.seed == b.seed && a.best_per_iteration == b.best_per_iteration &&
           a.best_position == b.best_position && a.best_fitness == b.best_fitness &&
           a.evaluations == b.evaluations;
}

} // namespace

TEST_CASE("run_experiment produces one record per triple with distinct seeds") {
    ExperimentConfig config = small_config();
    config.runs = 30;
    const std::vector<RunRecord> records = run_experiment(config);
    CHECK(records.size() == 30);
    std::set<std::uint64_t> seeds;
    for (const RunRecord& r : records) {
        CHECK(r.algorithm == "accs");
        CHECK(r.function == "F1");
        seeds.insert(r.seed);
    }
    CHECK(seeds.size() == 30);
}

TEST_CASE("a one-run experiment equals a direct optimize call") {
    ExperimentConfig config = small_config();
    config.runs = 1;
    const std::vector<RunRecord> records = run_experiment(config);
    REQUIRE(records.size() == 1);

    const std::vector<BenchmarkFn> suite = classical_suite();
    const BenchmarkFn* f1 = find_benchmark(suite, "F1");
    RngStream rng(config.root_seed, derive_stream_id("accs", "F1", 0));
    const Objective objective = [f1](std::span<const double> x) { return f1->evaluate(x); };
    const RunRecord direct = optimize(objective, f1->space(), config.accs, rng);
    CHECK(records[0].best_fitness == direct.best_fitness);
    CHECK(records[0].best_per_iteration == direct.best_per_iteration);
    CHECK(records[0].best_position == direct.best_position);
}

TEST_CASE("worker count cannot change results") {
    ExperimentConfig config = small_config();
    config.algorithms = {"accs", "pso", "random"};
    config.functions = {"F1", "F7", "F16"};
    config.runs = 2;
    config.pso.pop_size = 6;
    config.pso.max_iterations = 20;

    config.workers = 1;
    const std::vector<RunRecord> serial = run_experiment(config);
    config.workers = 8;
    const std::vector<RunRecord> parallel = run_experiment(config);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(records_equal_ignoring_time(serial[i], parallel[i]));
    }
}

TEST_CASE("unresolvable ids are configuration errors") {
    ExperimentConfig config = small_config();
    config.functions = {"F99"};
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
    config = small_config();
    config.algorithms = {"annealing"};
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
}

TEST_CASE("function groups expand against the catalogue") {
    const std::vector<std::string> classical = resolve_function_ids(
        std::vector<std::string>{"classical"});
    CHECK(classical.size() == 19);
    const std::vector<std::string> cec = resolve_function_ids(std::vector<std::string>{"cec2019"});
    CHECK(cec.size() == 10);
    const std::vector<std::string> all = resolve_function_ids(std::vector<std::string>{"all"});
    CHECK(all.size() == 29);
    const std::vector<std::string> dedup =
        resolve_function_ids(std::vector<std::string>{"F1", "classical"});
    CHECK(dedup.size() == 19);
}

TEST_CASE("summarize matches hand arithmetic") {
    std::vector<RunRecord> records(3);
    for (std::size_t i = 0; i < 3; ++i) {
        records[i].algorithm = "accs";
        records[i].function = "F1";
        records[i].best_fitness = 1.0;
    }
    SummaryTable table = summarize(records);
    REQUIRE(table.cells.size() == 1);
    CHECK(table.cells[0].mean == 1.0);
    CHECK(table.cells[0].stddev == 0.0);
    CHECK(table.cells[0].n == 3);

    records.resize(2);
    records[0].best_fitness = 0.0;
    records[1].best_fitness = 2.0;
    table = summarize(records);
    CHECK(table.cells[0].mean == 1.0);
    CHECK(table.cells[0].stddev == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(table.cells[0].best == 0.0);
    CHECK(table.cells[0].worst == 2.0);

    CHECK_THROWS_AS(summarize(std::span<const RunRecord>{}), std::invalid_argument);
}

TEST_CASE("summary survives the CSV round trip") {
    ExperimentConfig config = small_config();
    config.algorithms = {"accs", "random"};
    const std::vector<RunRecord> records = run_experiment(config);

    std::stringstream buffer;
    write_runs_csv(records, buffer);
    const std::vector<RunRow> rows = read_runs_csv(buffer);
    REQUIRE(rows.size() == records.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].final_best == records[i].best_fitness);
        CHECK(rows[i].seed == records[i].seed);
        CHECK(rows[i].iterations == records[i].best_per_iteration.size());
    }

    const SummaryTable direct = summarize(records);
    const SummaryTable via_csv = summarize(rows);
    REQUIRE(direct.cells.size() == via_csv.cells.size());
    for (std::size_t i = 0; i < direct.cells.size(); ++i) {
        CHECK(direct.cells[i].mean == via_csv.cells[i].mean);
        CHECK(direct.cells[i].stddev == via_csv.cells[i].stddev);
    }
}

TEST_CASE("full-precision formatting round-trips doubles") {
    CHECK(format_full(1.0) == "1.0000000000000000e+00");
    // Includes a subnormal: collapsing runs record finals below DBL_MIN.
    for (const double v : {1.0 / 3.0, 8.88e-16, -12569.486618173014, 0.0, 4.1613e-309}) {
        char* end = nullptr;
        const std::string text = format_full(v);
        CHECK(std::strtod(text.c_str(), &end) == v);
        CHECK(end == text.c_str() + text.size());
    }
}

TEST_CASE("runs CSV uses LF endings and the documented header") {
    std::vector<RunRecord> records(1);
    records[0].algorithm = "accs";
    records[0].function = "F1";
    std::stringstream buffer;
    write_runs_csv(records, buffer);
    const std::string text = buffer.str();
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.rfind("algorithm,function,run,seed,iterations,evaluations,final_best,wall_time_s\n",
                     0) == 0);
}

TEST_CASE("identical record sets emit identical bytes") {
    ExperimentConfig config = small_config();
    const std::vector<RunRecord> a = run_experiment(config);
    const std::vector<RunRecord> b = run_experiment(config);
    std::stringstream sa;
    std::stringstream sb;
    write_runs_csv(a, sa, TimingMode::Zeroed);
    write_runs_csv(b, sb, TimingMode::Zeroed);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("convergence trace matches the recorded run") {
    ExperimentConfig config = small_config();
    config.accs.max_iterations = 500;
    config.runs = 1;
    const std::vector<RunRecord> records = run_experiment(config);
    const auto rows = convergence_trace(records[0]);
    CHECK(rows.size() == 500);
    CHECK(rows.front().first == 1);
    CHECK(rows.back().first == 500);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].second <= rows[i - 1].second);
    }

    RunRecord constant;
    constant.best_per_iteration = {2.0, 2.0, 2.0};
    const auto flat_rows = convergence_trace(constant);
    CHECK(flat_rows.size() == 3);
    CHECK(flat_rows[0].second == flat_rows[2].second);
}

TEST_CASE("traces CSV round-trips") {
    ExperimentConfig config = small_config();
    config.runs = 2;
    const std::vector<RunRecord> records = run_experiment(config);
    std::stringstream buffer;
    write_traces_csv(records, buffer);
    const std::vector<TraceRow> rows = read_traces_csv(buffer);
    CHECK(rows.size() == 2 * config.accs.max_iterations);
    CHECK(rows[0].iteration == 1);
    CHECK(rows[0].best == records[0].best_per_iteration[0]);
}

TEST_CASE("single algorithm ranks first everywhere") {
    SummaryTable summary;
    for (const char* fn : {"F1", "F2", "F3"}) {
        SummaryCell cell;
        cell.algorithm = "accs";
        cell.function = fn;
        cell.mean = 1.0;
        summary.cells.push_back(cell);
    }
    const RankTable table = rank_algorithms(summary);
    CHECK(table.overall_of("accs") == 1.0);
    for (const FunctionRanking& ranking : table.per_function) {
        CHECK(ranking.rank_of("accs") == 1.0);
    }
}

TEST_CASE("ties share the better rank and the next rank skips") {
    SummaryTable summary;
    const struct {
        const char* algo;
        double mean;
    } cells[] = {{"A", 1.0}, {"B", 1.0}, {"C", 2.0}, {"D", 0.5}};
    for (const auto& c : cells) {
        SummaryCell cell;
        cell.algorithm = c.algo;
        cell.function = "F1";
        cell.mean = c.mean;
        summary.cells.push_back(cell);
    }
    const RankTable table = rank_algorithms(summary);
    const FunctionRanking& r = table.per_function.front();
    CHECK(r.rank_of("D") == 1.0);
    CHECK(r.rank_of("A") == 2.0);
    CHECK(r.rank_of("B") == 2.0);
    CHECK(r.rank_of("C") == 4.0);
    CHECK(r.order() == std::vector<std::string>{"D", "A", "B", "C"});
}

TEST_CASE("missing cells are ranking errors") {
    SummaryTable summary;
    SummaryCell a;
    a.algorithm = "A";
    a.function = "F1";
    summary.cells.push_back(a);
    SummaryCell b;
    b.algorithm = "B";
    b.function = "F2";
    summary.cells.push_back(b);
    CHECK_THROWS_AS(rank_algorithms(summary), std::invalid_argument);
}

TEST_CASE("classical categories partition F1..F19") {
    CHECK(classical_category("F1") == "unimodal");
    CHECK(classical_category("F7") == "unimodal");
    CHECK(classical_category("F8") == "multimodal");
    CHECK(classical_category("F13") == "multimodal");
    CHECK(classical_category("F14") == "fixed-dimension");
    CHECK(classical_category("F19") == "fixed-dimension");
    CHECK(classical_category("CEC04") == "");
    CHECK(classical_category("F20") == "");
}

TEST_CASE("literature summary fixture ranks as its means dictate") {
    const FixtureTable fixture =
        load_fixture_table(kDataDir / "fixtures" / "classical_literature.json");
    CHECK(fixture.summary.cells.size() == 19 * 6);
    const RankTable table = rank_algorithms(fixture.summary);

    // The one row whose published ordering is consistent with its means.
    const FunctionRanking* f7 = nullptr;
    for (const FunctionRanking& ranking : table.per_function) {
        if (ranking.function == "F7") {
            f7 = &ranking;
        }
    }
    REQUIRE(f7 != nullptr);
    CHECK(f7->order() ==
          std::vector<std::string>{"ACCS", "WOA", "DE", "GSA", "PSO", "FEP"});

    // Shared-rank rows: equal means keep the better rank.
    for (const FunctionRanking& ranking : table.per_function) {
        if (ranking.function == "F4" || ranking.function == "F9" ||
            ranking.function == "F11") {
            CHECK(ranking.rank_of("ACCS") == 1.0);
            CHECK(ranking.groups.front().size() == 2);
        }
    }

    // The unavailable DE cell on F19 ranks behind every reported value.
    for (const FunctionRanking& ranking : table.per_function) {
        if (ranking.function == "F19") {
            CHECK(ranking.rank_of("DE") == 6.0);
            CHECK(ranking.rank_of("ACCS") == 5.0);
        }
    }

    // Ranked purely by the published means, the ACCS rank sum is 69 (its two
    // internally inconsistent published rows would make it 63).
    const double overall = table.overall_of("ACCS");
    CHECK(overall == doctest::Approx(69.0 / 19.0).epsilon(1e-12));
}

TEST_CASE("replaying the published rank table reproduces its own arithmetic") {
    const auto orders =
        load_ranking_orders(kDataDir / "fixtures" / "classical_ranking_literature.json");
    REQUIRE(orders.size() == 19);
    const RankTable table = rank_from_orders(orders);
    CHECK(table.overall_of("ACCS") == doctest::Approx(63.0 / 19.0).epsilon(1e-12));

    // Category averages match the published subtotals 15/7, 14/6, 34/6.
    REQUIRE(table.categories.size() == 3);
    for (std::size_t c = 0; c < table.categories.size(); ++c) {
        const double accs = table.category_average[c][0];
        if (table.categories[c] == "unimodal") {
            CHECK(accs == doctest::Approx(15.0 / 7.0).epsilon(1e-12));
        } else if (table.categories[c] == "multimodal") {
            CHECK(accs == doctest::Approx(14.0 / 6.0).epsilon(1e-12));
        } else {
            CHECK(accs == doctest::Approx(34.0 / 6.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("compare_to_fixture verdicts") {
    SummaryTable measured;
    const struct {
        const char* fn;
        double mean;
    } cells[] = {{"F1", 1e-12}, {"F5", 29.1}, {"F9", 4.2}};
    for (const auto& c : cells) {
        SummaryCell cell;
        cell.algorithm = "ACCS";
        cell.function = c.fn;
        cell.mean = c.mean;
        measured.cells.push_back(cell);
    }

    FixtureTable fixture;
    fixture.algorithms = {"ACCS"};
    for (const auto& [fn, mean] : std::initializer_list<std::pair<const char*, double>>{
             {"F1", 0.0}, {"F5", 28.9653}, {"F9", 0.0}}) {
        SummaryCell cell;
        cell.algorithm = "ACCS";
        cell.function = fn;
        cell.mean = mean;
        fixture.summary.cells.push_back(cell);
    }

    TolerancePolicy policy;
    policy.bands.push_back({"F1", "ACCS", Band::Kind::Max, 1e-8, 0, 0});
    policy.bands.push_back({"F5", "ACCS", Band::Kind::Range, 0, 20.0, 40.0});
    policy.bands.push_back({"F9", "ACCS", Band::Kind::Max, 1e-6, 0, 0});

    const CompareReport report = compare_to_fixture(measured, fixture, policy);
    REQUIRE(report.cells.size() == 3);
    CHECK(report.cells[0].passed);
    CHECK(report.cells[1].passed);
    CHECK_FALSE(report.cells[2].passed);
    CHECK_FALSE(report.all_passed);
    CHECK(report.cells[2].note.find("delta") != std::string::npos);

    std::stringstream os;
    print_compare_report(report, os);
    CHECK(os.str().find("FAIL") != std::string::npos);
}

TEST_CASE("CEC literature fixture ships and parses") {
    // Reference-only: shifted-instance results are not comparable to the
    // base-definition functions built here, so no bands attach to these.
    const FixtureTable fixture = load_fixture_table(kDataDir / "fixtures" / "cec_literature.json");
    CHECK(fixture.algorithms.size() == 6);
    CHECK(fixture.summary.cells.size() == 10 * 6);
    const SummaryCell* cell = fixture.summary.find("CEC05", "ACCS");
    REQUIRE(cell != nullptr);
    CHECK(cell->mean == 6.13997);
}

TEST_CASE("band policy file parses") {
    const TolerancePolicy policy =
        load_tolerance_policy(kDataDir / "fixtures" / "accs_reference_bands.json");
    CHECK(policy.bands.size() == 6);
    bool has_f10 = false;
    for (const Band& band : policy.bands) {
        if (band.function == "F10") {
            has_f10 = true;
            CHECK(band.kind == Band::Kind::Max);
            CHECK(band.value == 1e-12);
        }
    }
    CHECK(has_f10);
}

TEST_CASE("experiment outputs land in the requested directory") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "accs_harness_test_out";
    std::filesystem::remove_all(dir);
    ExperimentConfig config = small_config();
    const std::vector<RunRecord> records = run_experiment(config);
    write_experiment_outputs(records, dir);
    CHECK(std::filesystem::exists(dir / "runs.csv"));
    CHECK(std::filesystem::exists(dir / "traces.csv"));
    std::ifstream runs(dir / "runs.csv");
    const std::vector<RunRow> rows = read_runs_csv(runs);
    CHECK(rows.size() == records.size());
    std::filesystem::remove_all(dir);
}
