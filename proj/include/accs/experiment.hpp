#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "accs/algorithm.hpp"
#include "accs/benchmarks.hpp"
#include "accs/csv.hpp"
#include "accs/pso.hpp"
#include "accs/run_record.hpp"

namespace accs {

/// Experiment plan: which algorithms on which functions, how many runs each,
/// all keyed off one root seed. Function ids may be individual ids or the
/// groups "all", "classical", "cec2019".
struct ExperimentConfig {
    std::vector<std::string> algorithms = {"accs"};
    std::vector<std::string> functions = {"classical"};
    std::size_t runs = 30;
    std::uint64_t root_seed = 0;
    std::size_t workers = 1;
    AccsParams accs;
    PsoParams pso;
    // Default random-search budget matches the ACCS evaluation count at the
    // configured pop/iterations; override for a custom budget.
    std::uint64_t random_budget = 0;
};

/// Stable 64-bit stream id for one (algorithm, function, run, purpose)
/// quadruple. Independent of execution order, so parallel schedules cannot
/// change results.
std::uint64_t derive_stream_id(std::string_view algorithm, std::string_view function,
                               std::uint64_t run_index, std::string_view purpose = "search");

/// Binds a benchmark into an objective; stochastic functions draw from a
/// dedicated noise stream.
Objective make_objective(const BenchmarkFn& fn, std::uint64_t root_seed,
                         std::uint64_t noise_stream_id);

/// Expands function groups against the full catalogue.
/// Throws std::invalid_argument on unknown ids.
std::vector<std::string> resolve_function_ids(std::span<const std::string> requested);

/// Runs every (algorithm, function, run) triple of the config; results arrive
/// in triple order regardless of worker count.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

/// Persists runs.csv and traces.csv into the directory (created on demand).
void write_experiment_outputs(std::span<const RunRecord> records,
                              const std::filesystem::path& out_dir,
                              TimingMode timing = TimingMode::Measured);

} // namespace accs
