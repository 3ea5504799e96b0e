#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "accs/run_record.hpp"
#include "accs/stats.hpp"

namespace accs {

/// Full-precision scientific notation (17 significant digits); round-trips
/// any finite double through strtod.
std::string format_full(double value);

/// Timing column policy for persisted runs. Zeroed timing makes the emitted
/// bytes a pure function of (config, root seed); measured timing is
/// diagnostic and varies between executions.
enum class TimingMode { Measured, Zeroed };

/// Header: algorithm,function,run,seed,iterations,evaluations,final_best,wall_time_s
/// One row per run, UTF-8, LF line endings.
void write_runs_csv(std::span<const RunRecord> records, std::ostream& os,
                    TimingMode timing = TimingMode::Measured);
std::vector<RunRow> read_runs_csv(std::istream& is);

/// Header: algorithm,function,run,iteration,best — every run's full trace.
void write_traces_csv(std::span<const RunRecord> records, std::ostream& os);

struct TraceRow {
    std::string algorithm;
    std::string function;
    std::uint64_t run_index = 0;
    std::uint64_t iteration = 0;
    double best = 0.0;
};
std::vector<TraceRow> read_traces_csv(std::istream& is);

/// (iteration, best-so-far) rows, 1-based, one per recorded iteration.
std::vector<std::pair<std::uint64_t, double>> convergence_trace(const RunRecord& record);

/// Header: iteration,best
void write_trace_csv(const RunRecord& record, std::ostream& os);
void write_trace_csv(std::span<const std::pair<std::uint64_t, double>> rows, std::ostream& os);

/// Header: algorithm,function,n,mean,std,best,worst
void write_summary_csv(const SummaryTable& table, std::ostream& os);
std::string summary_to_json(const SummaryTable& table);

} // namespace accs
