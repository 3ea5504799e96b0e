#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accs/csv.hpp"
#include "accs/experiment.hpp"
#include "accs/fixture.hpp"
#include "accs/stats.hpp"

namespace {

using namespace accs;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCompare = 2;

std::vector<BenchmarkFn> suite_by_name(const std::string& name) {
    if (name == "classical") {
        return classical_suite();
    }
    if (name == "cec2019") {
        return cec2019_suite();
    }
    if (name == "all") {
        return all_benchmarks();
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

int cmd_list(const std::string& suite_name, const std::string& format) {
    const std::vector<BenchmarkFn> suite = suite_by_name(suite_name);
    if (format == "table") {
        std::cout << std::left << std::setw(8) << "id" << std::setw(6) << "dim" << std::setw(12)
                  << "lower" << std::setw(12) << "upper" << "fmin\n";
        for (const BenchmarkFn& fn : suite) {
            std::cout << std::left << std::setw(8) << fn.id() << std::setw(6) << fn.dim()
                      << std::setw(12) << fn.space().lower()[0] << std::setw(12)
                      << fn.space().upper()[0];
            if (fn.known_fmin()) {
                std::cout << *fn.known_fmin();
            } else {
                std::cout << "unknown";
            }
            std::cout << '\n';
        }
    } else if (format == "csv") {
        std::cout << "id,dim,lower,upper,fmin\n";
        for (const BenchmarkFn& fn : suite) {
            std::cout << fn.id() << ',' << fn.dim() << ',' << format_full(fn.space().lower()[0])
                      << ',' << format_full(fn.space().upper()[0]) << ',';
            if (fn.known_fmin()) {
                std::cout << format_full(*fn.known_fmin());
            }
            std::cout << '\n';
        }
    } else { // json
        std::cout << "[\n";
        for (std::size_t i = 0; i < suite.size(); ++i) {
            const BenchmarkFn& fn = suite[i];
            std::cout << "  {\"id\": \"" << fn.id() << "\", \"dim\": " << fn.dim()
                      << ", \"lower\": " << fn.space().lower()[0]
                      << ", \"upper\": " << fn.space().upper()[0] << ", \"fmin\": ";
            if (fn.known_fmin()) {
                std::cout << *fn.known_fmin();
            } else {
                std::cout << "null";
            }
            std::cout << (i + 1 < suite.size() ? "},\n" : "}\n");
        }
        std::cout << "]\n";
    }
    return kExitOk;
}

std::vector<RunRow> load_runs(const std::filesystem::path& dir) {
    std::ifstream is(dir / "runs.csv");
    if (!is) {
        throw std::invalid_argument("cannot open " + (dir / "runs.csv").string());
    }
    return read_runs_csv(is);
}

int cmd_summarize(const std::filesystem::path& in_dir, const std::string& format) {
    const std::vector<RunRow> rows = load_runs(in_dir);
    const SummaryTable table = summarize(rows);
    if (format == "json") {
        std::cout << summary_to_json(table);
    } else {
        write_summary_csv(table, std::cout);
    }
    return kExitOk;
}

int cmd_rank(const std::filesystem::path& in_dir) {
    const std::vector<RunRow> rows = load_runs(in_dir);
    const RankTable table = rank_algorithms(summarize(rows));
    std::cout << "per-function ranking (ascending mean; ties share the better rank)\n";
    for (const FunctionRanking& ranking : table.per_function) {
        std::cout << std::left << std::setw(8) << ranking.function;
        for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
            if (g > 0) {
                std::cout << " | ";
            }
            for (std::size_t i = 0; i < ranking.groups[g].size(); ++i) {
                std::cout << (i > 0 ? ", " : "") << ranking.groups[g][i];
            }
        }
        std::cout << '\n';
    }
    std::cout << '\n'
              << std::left << std::setw(10) << "algorithm" << std::setw(10) << "rank-sum"
              << std::setw(10) << "overall";
    for (const std::string& category : table.categories) {
        std::cout << std::setw(16) << category;
    }
    std::cout << '\n';
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
        std::cout << std::left << std::setw(10) << table.algorithms[a] << std::setw(10)
                  << table.rank_sum[a] << std::setw(10) << std::setprecision(4)
                  << table.overall_average[a];
        for (std::size_t c = 0; c < table.categories.size(); ++c) {
            std::cout << std::setw(16) << table.category_average[c][a];
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_compare(const std::filesystem::path& in_dir, const std::filesystem::path& fixture_file,
                const std::filesystem::path& bands_file) {
    const std::vector<RunRow> rows = load_runs(in_dir);
    SummaryTable measured = summarize(rows);
    // Measured algorithm ids are lowercase; fixtures carry the literature names.
    for (SummaryCell& cell : measured.cells) {
        if (cell.algorithm == "accs") {
            cell.algorithm = "ACCS";
        } else if (cell.algorithm == "pso") {
            cell.algorithm = "PSO";
        }
    }
    const FixtureTable fixture = load_fixture_table(fixture_file);
    const TolerancePolicy policy = load_tolerance_policy(bands_file);
    const CompareReport report = compare_to_fixture(measured, fixture, policy);
    if (!fixture.label.empty()) {
        std::cout << "fixture: " << fixture.label << '\n';
    }
    print_compare_report(report, std::cout);
    return report.all_passed ? kExitOk : kExitCompare;
}

int cmd_trace(const std::filesystem::path& in_dir, const std::string& triple,
              const std::string& out_file) {
    std::vector<std::string> parts;
    std::stringstream ss(triple);
    std::string part;
    while (std::getline(ss, part, ',')) {
        parts.push_back(part);
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("--run expects algorithm,function,run-index");
    }
    const std::uint64_t run_index = std::stoull(parts[2]);

    std::ifstream is(in_dir / "traces.csv");
    if (!is) {
        throw std::invalid_argument("cannot open " + (in_dir / "traces.csv").string());
    }
    const std::vector<TraceRow> rows = read_traces_csv(is);
    std::vector<std::pair<std::uint64_t, double>> trace;
    for (const TraceRow& row : rows) {
        if (row.algorithm == parts[0] && row.function == parts[1] && row.run_index == run_index) {
            trace.emplace_back(row.iteration, row.best);
        }
    }
    if (trace.empty()) {
        throw std::invalid_argument("no trace for " + triple);
    }
    if (out_file.empty()) {
        write_trace_csv(trace, std::cout);
    } else {
        std::ofstream os(out_file, std::ios::binary);
        if (!os) {
            throw std::invalid_argument("cannot write " + out_file);
        }
        write_trace_csv(trace, os);
    }
    return kExitOk;
}

struct RunSettings {
    std::vector<std::string> algos{"accs"};
    std::vector<std::string> fns{"classical"};
    std::size_t runs = 30;
    std::size_t iters = 500;
    std::size_t pop = 30;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::uint64_t budget = 0;
    std::string out_dir;
    bool zero_timing = false;
};

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// Flat key=value file mirroring the run settings; '#' starts a comment.
// Applied before command-line parsing, so flags override file values.
void load_run_config(const std::string& file, RunSettings& settings) {
    std::ifstream is(file);
    if (!is) {
        throw std::invalid_argument("cannot open config file " + file);
    }
    std::string line;
    while (std::getline(is, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        const auto trim = [](std::string s) {
            const auto from = s.find_first_not_of(" \t\r");
            const auto to = s.find_last_not_of(" \t\r");
            return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            continue;
        }
        if (key == "algo" || key == "algorithms") {
            settings.algos = split_list(value);
        } else if (key == "fn" || key == "functions") {
            settings.fns = split_list(value);
        } else if (key == "runs") {
            settings.runs = std::stoull(value);
        } else if (key == "iters") {
            settings.iters = std::stoull(value);
        } else if (key == "pop") {
            settings.pop = std::stoull(value);
        } else if (key == "seed") {
            settings.seed = std::stoull(value);
        } else if (key == "workers") {
            settings.workers = std::stoull(value);
        } else if (key == "budget") {
            settings.budget = std::stoull(value);
        } else if (key == "out") {
            settings.out_dir = value;
        } else if (key == "zero-timing" || key == "zero_timing") {
            settings.zero_timing = value == "1" || value == "true";
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACCS optimizer and benchmark harness"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "Print the function catalogue");
    std::string list_suite = "all";
    std::string list_format = "table";
    list->add_option("--suite", list_suite, "all|classical|cec2019")->capture_default_str();
    list->add_option("--format", list_format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();

    auto* run = app.add_subcommand("run", "Execute an experiment and persist results");
    RunSettings settings;
    // Config file values land in `settings` before CLI11 applies flags, so
    // command-line values override the file.
    std::string config_file;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            config_file = argv[i + 1];
        }
    }
    if (!config_file.empty()) {
        try {
            load_run_config(config_file, settings);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitConfig;
        }
    }
    std::string config_file_display;
    run->add_option("--config", config_file_display,
                    "Flat key=value config file; flags override it");
    run->add_option("--algo", settings.algos, "accs|pso|random (repeatable)");
    run->add_option("--fn", settings.fns, "Function id or all|classical|cec2019 (repeatable)");
    run->add_option("--runs", settings.runs, "Independent runs per pair");
    run->add_option("--iters", settings.iters, "Iterations per run");
    run->add_option("--pop", settings.pop, "Population size");
    run->add_option("--seed", settings.seed, "Root seed");
    run->add_option("--workers", settings.workers, "Worker threads");
    run->add_option("--budget", settings.budget,
                    "Random-search evaluation budget (default: match accs)");
    run->add_option("--out", settings.out_dir, "Output directory");
    run->add_flag("--zero-timing,!--measured-timing", settings.zero_timing,
                  "Write wall_time_s as 0 for byte-reproducible outputs");

    auto* summ = app.add_subcommand("summarize", "Aggregate persisted runs");
    std::string summ_in;
    std::string summ_format = "csv";
    summ->add_option("--in", summ_in, "Directory containing runs.csv")->required();
    summ->add_option("--format", summ_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* rank = app.add_subcommand("rank", "Rank algorithms from persisted runs");
    std::string rank_in;
    rank->add_option("--in", rank_in, "Directory containing runs.csv")->required();

    auto* compare = app.add_subcommand("compare", "Check persisted runs against a fixture");
    std::string compare_in;
    std::string fixture_file;
    std::string bands_file;
    compare->add_option("--in", compare_in, "Directory containing runs.csv")->required();
    compare->add_option("--fixture", fixture_file, "Fixture table (json)")->required();
    compare->add_option("--bands", bands_file, "Tolerance bands (json)")->required();

    auto* trace = app.add_subcommand("trace", "Emit one run's convergence CSV");
    std::string trace_in;
    std::string trace_run;
    std::string trace_out;
    trace->add_option("--in", trace_in, "Directory containing traces.csv")->required();
    trace->add_option("--run", trace_run, "algorithm,function,run-index")->required();
    trace->add_option("--out", trace_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            return cmd_list(list_suite, list_format);
        }
        if (run->parsed()) {
            if (settings.out_dir.empty()) {
                std::cerr << "error: --out (or config key 'out') is required\n";
                return kExitConfig;
            }
            ExperimentConfig config;
            config.algorithms = settings.algos;
            config.functions = settings.fns;
            config.runs = settings.runs;
            config.root_seed = settings.seed;
            config.workers = settings.workers;
            config.accs.max_iterations = settings.iters;
            config.accs.pop_size = settings.pop;
            config.pso.max_iterations = settings.iters;
            config.pso.pop_size = settings.pop;
            config.random_budget = settings.budget;
            const std::vector<RunRecord> records = run_experiment(config);
            write_experiment_outputs(records, settings.out_dir,
                                     settings.zero_timing ? TimingMode::Zeroed
                                                          : TimingMode::Measured);
            std::cout << "wrote " << records.size() << " runs to " << settings.out_dir << '\n';
            return kExitOk;
        }
        if (summ->parsed()) {
            return cmd_summarize(summ_in, summ_format);
        }
        if (rank->parsed()) {
            return cmd_rank(rank_in);
        }
        if (compare->parsed()) {
            return cmd_compare(compare_in, fixture_file, bands_file);
        }
        if (trace->parsed()) {
            return cmd_trace(trace_in, trace_run, trace_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}
