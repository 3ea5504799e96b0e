#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accs/run_record.hpp"

namespace accs {

/// Mean/std/extremes of the final bests of one (function, algorithm) cell.
/// A NaN mean marks a value reported as unavailable (fixtures only); such
/// cells rank behind every finite one.
struct SummaryCell {
    std::string algorithm;
    std::string function;
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation (n-1 divisor), 0 when n == 1
    double best = 0.0;
    double worst = 0.0;
};

struct SummaryTable {
    std::vector<SummaryCell> cells;

    const SummaryCell* find(std::string_view function, std::string_view algorithm) const;
    std::vector<std::string> algorithms() const; // first-appearance order
    std::vector<std::string> functions() const;  // first-appearance order
};

/// Per-run final value, as persisted in the runs CSV.
struct RunRow {
    std::string algorithm;
    std::string function;
    std::uint64_t run_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    std::uint64_t evaluations = 0;
    double final_best = 0.0;
    double wall_time_seconds = 0.0;
};

/// Aggregates final bests per (function, algorithm).
/// Throws std::invalid_argument on empty input.
SummaryTable summarize(std::span<const RunRecord> records);
SummaryTable summarize(std::span<const RunRow> rows);

/// Ranking of one function's algorithms: tie groups in ascending mean order.
/// Tied algorithms share the better (competition) rank; the next distinct
/// mean resumes at 1 + number of algorithms placed so far.
struct FunctionRanking {
    std::string function;
    std::vector<std::vector<std::string>> groups; // ascending; ties grouped
    std::vector<std::string> algorithms;          // table order
    std::vector<double> ranks;                    // rank per algorithms[i]

    double rank_of(std::string_view algorithm) const; // throws on unknown id
    std::vector<std::string> order() const;           // groups flattened
};

struct RankTable {
    std::vector<FunctionRanking> per_function;
    std::vector<std::string> algorithms;
    std::vector<double> rank_sum;        // per algorithms[i]
    std::vector<double> overall_average; // rank_sum / function count
    // Category averages over the classical groups present in the input:
    // unimodal F1-F7, multimodal F8-F13, fixed-dimension F14-F19.
    std::vector<std::string> categories;
    std::vector<std::vector<double>> category_average; // [category][algorithm]

    double overall_of(std::string_view algorithm) const; // throws on unknown id
};

/// Ranks algorithms per function by ascending mean (minimization) and
/// aggregates rank sums and averages.
/// Throws std::invalid_argument when a (function, algorithm) cell is missing.
RankTable rank_algorithms(const SummaryTable& summary);

/// Aggregates a ranking given externally fixed per-function tie groups
/// (ascending order). Used to replay published rank tables through the same
/// rank arithmetic.
RankTable rank_from_orders(
    std::span<const std::pair<std::string, std::vector<std::vector<std::string>>>> orders);

/// Classical category of a function id: "unimodal", "multimodal",
/// "fixed-dimension", or "" when outside the classical suite.
std::string_view classical_category(std::string_view function_id);

} // namespace accs
