#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "accs/stats.hpp"

namespace accs {

/// A transcribed literature results table (means/stds per cell). Values are
/// reference fixtures, never measured output; unavailable entries load as NaN.
struct FixtureTable {
    std::string label;
    std::vector<std::string> algorithms;
    SummaryTable summary;
};

FixtureTable load_fixture_table(const std::filesystem::path& file);

/// Acceptance band for one summary cell.
struct Band {
    enum class Kind { Max, Range, AbsTol };
    std::string function;
    std::string algorithm;
    Kind kind = Kind::Max;
    double value = 0.0; // Max bound, or AbsTol tolerance
    double lo = 0.0;    // Range bounds
    double hi = 0.0;

    std::string describe() const;
};

struct TolerancePolicy {
    std::string label;
    std::vector<Band> bands;
};

TolerancePolicy load_tolerance_policy(const std::filesystem::path& file);

struct CellReport {
    std::string function;
    std::string algorithm;
    double measured_mean = 0.0;
    double fixture_mean = 0.0; // NaN when the fixture has no value
    std::string band;
    bool passed = false;
    std::string note;
};

struct CompareReport {
    std::vector<CellReport> cells;
    bool all_passed = true;
};

/// Checks each banded cell of the measured summary against its band, with the
/// fixture value carried along for context. Always produces a report.
CompareReport compare_to_fixture(const SummaryTable& measured, const FixtureTable& fixture,
                                 const TolerancePolicy& policy);

void print_compare_report(const CompareReport& report, std::ostream& os);

/// Published per-function rank orderings (ascending tie groups), for replaying
/// literature rank tables through rank_from_orders.
std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>
load_ranking_orders(const std::filesystem::path& file);

} // namespace accs
