#include "accs/fixture.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace accs {

namespace {

nlohmann::json load_json(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) {
        throw std::invalid_argument("cannot open " + file.string());
    }
    nlohmann::json j;
    is >> j;
    return j;
}

double number_or_nan(const nlohmann::json& v) {
    if (v.is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return v.get<double>();
}

} // namespace

FixtureTable load_fixture_table(const std::filesystem::path& file) {
    const nlohmann::json j = load_json(file);
    FixtureTable fixture;
    fixture.label = j.value("label", "");
    for (const auto& a : j.at("algorithms")) {
        fixture.algorithms.push_back(a.get<std::string>());
    }
    for (const auto& cell : j.at("cells")) {
        SummaryCell c;
        c.function = cell.at("function").get<std::string>();
        c.algorithm = cell.at("algorithm").get<std::string>();
        c.mean = number_or_nan(cell.at("mean"));
        c.stddev = cell.contains("std") ? number_or_nan(cell.at("std")) : 0.0;
        c.n = 0; // literature cells carry no raw samples
        c.best = c.mean;
        c.worst = c.mean;
        fixture.summary.cells.push_back(std::move(c));
    }
    return fixture;
}

std::string Band::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Max:
        os << "<= " << value;
        break;
    case Kind::Range:
        os << "in [" << lo << ", " << hi << "]";
        break;
    case Kind::AbsTol:
        os << "within " << value << " of fixture";
        break;
    }
    return os.str();
}

TolerancePolicy load_tolerance_policy(const std::filesystem::path& file) {
    const nlohmann::json j = load_json(file);
    TolerancePolicy policy;
    policy.label = j.value("label", "");
    for (const auto& b : j.at("bands")) {
        Band band;
        band.function = b.at("function").get<std::string>();
        band.algorithm = b.value("algorithm", "ACCS");
        const std::string kind = b.at("kind").get<std::string>();
        if (kind == "max") {
            band.kind = Band::Kind::Max;
            band.value = b.at("value").get<double>();
        } else if (kind == "range") {
            band.kind = Band::Kind::Range;
            band.lo = b.at("lo").get<double>();
            band.hi = b.at("hi").get<double>();
        } else if (kind == "abs") {
            band.kind = Band::Kind::AbsTol;
            band.value = b.at("tol").get<double>();
        } else {
            throw std::invalid_argument("tolerance policy: unknown band kind '" + kind + "'");
        }
        policy.bands.push_back(std::move(band));
    }
    return policy;
}

CompareReport compare_to_fixture(const SummaryTable& measured, const FixtureTable& fixture,
                                 const TolerancePolicy& policy) {
    CompareReport report;
    for (const Band& band : policy.bands) {
        CellReport cell;
        cell.function = band.function;
        cell.algorithm = band.algorithm;
        cell.band = band.describe();

        const SummaryCell* fix = fixture.summary.find(band.function, band.algorithm);
        cell.fixture_mean = fix != nullptr ? fix->mean : std::numeric_limits<double>::quiet_NaN();

        const SummaryCell* got = measured.find(band.function, band.algorithm);
        if (got == nullptr) {
            cell.passed = false;
            cell.note = "no measured cell";
            report.cells.push_back(std::move(cell));
            report.all_passed = false;
            continue;
        }
        cell.measured_mean = got->mean;
        switch (band.kind) {
        case Band::Kind::Max:
            cell.passed = got->mean <= band.value;
            break;
        case Band::Kind::Range:
            cell.passed = band.lo <= got->mean && got->mean <= band.hi;
            break;
        case Band::Kind::AbsTol:
            if (fix == nullptr || std::isnan(cell.fixture_mean)) {
                cell.passed = false;
                cell.note = "no fixture value";
            } else {
                cell.passed = std::fabs(got->mean - cell.fixture_mean) <= band.value;
            }
            break;
        }
        if (!cell.passed && cell.note.empty()) {
            std::ostringstream os;
            os << "delta vs fixture = " << got->mean - cell.fixture_mean;
            cell.note = os.str();
        }
        report.all_passed = report.all_passed && cell.passed;
        report.cells.push_back(std::move(cell));
    }
    return report;
}

void print_compare_report(const CompareReport& report, std::ostream& os) {
    os << std::left << std::setw(8) << "func" << std::setw(8) << "algo" << std::setw(16)
       << "measured" << std::setw(16) << "fixture" << std::setw(24) << "band"
       << "verdict\n";
    for (const CellReport& cell : report.cells) {
        std::ostringstream measured;
        measured << std::setprecision(6) << cell.measured_mean;
        std::ostringstream fix;
        if (std::isnan(cell.fixture_mean)) {
            fix << "n/a";
        } else {
            fix << std::setprecision(6) << cell.fixture_mean;
        }
        os << std::left << std::setw(8) << cell.function << std::setw(8) << cell.algorithm
           << std::setw(16) << measured.str() << std::setw(16) << fix.str() << std::setw(24)
           << cell.band << (cell.passed ? "PASS" : "FAIL");
        if (!cell.note.empty()) {
            os << "  (" << cell.note << ")";
        }
        os << '\n';
    }
    os << (report.all_passed ? "all bands passed" : "band failures present") << '\n';
}

std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>
load_ranking_orders(const std::filesystem::path& file) {
    const nlohmann::json j = load_json(file);
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> orders;
    for (const auto& f : j.at("functions")) {
        std::vector<std::vector<std::string>> groups;
        for (const auto& group : f.at("order")) {
            std::vector<std::string> names;
            for (const auto& name : group) {
                names.push_back(name.get<std::string>());
            }
            groups.push_back(std::move(names));
        }
        orders.emplace_back(f.at("function").get<std::string>(), std::move(groups));
    }
    return orders;
}

} // namespace accs
