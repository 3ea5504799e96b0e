#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace accs {

/// Result of one optimization run: the per-iteration best trace plus the
/// final incumbent. The trace is non-increasing for every algorithm in this
/// library, and best_fitness equals its last entry when the trace is non-empty.
struct RunRecord {
    std::string algorithm;
    std::string function;
    std::uint64_t run_index = 0;
    std::uint64_t seed = 0; // derived stream id that drove the run
    std::vector<double> best_per_iteration;
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::uint64_t evaluations = 0;
    double wall_time_seconds = 0.0;
};

inline bool trace_is_monotone(const RunRecord& record) {
    for (std::size_t i = 1; i < record.best_per_iteration.size(); ++i) {
        if (record.best_per_iteration[i] > record.best_per_iteration[i - 1]) {
            return false;
        }
    }
    return true;
}

} // namespace accs
