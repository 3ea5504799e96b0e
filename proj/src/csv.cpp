#include "accs/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace accs {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

double parse_double(const std::string& s) {
    // Not std::stod: it throws on subnormal results (ERANGE), and collapsing
    // runs legitimately record subnormal finals.
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw std::invalid_argument("csv: bad numeric field '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("csv: bad integer field '" + s + "'");
    }
    return v;
}

void expect_header(const std::string& got, const std::string& want) {
    std::string trimmed = got;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == '\n')) {
        trimmed.pop_back();
    }
    if (trimmed != want) {
        throw std::invalid_argument("csv: expected header '" + want + "', got '" + trimmed + "'");
    }
}

} // namespace

std::string format_full(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.16e", value);
    return buffer;
}

void write_runs_csv(std::span<const RunRecord> records, std::ostream& os, TimingMode timing) {
    os << "algorithm,function,run,seed,iterations,evaluations,final_best,wall_time_s\n";
    for (const RunRecord& r : records) {
        const double wall = timing == TimingMode::Measured ? r.wall_time_seconds : 0.0;
        os << r.algorithm << ',' << r.function << ',' << r.run_index << ',' << r.seed << ','
           << r.best_per_iteration.size() << ',' << r.evaluations << ','
           << format_full(r.best_fitness) << ',' << format_full(wall) << '\n';
    }
}

std::vector<RunRow> read_runs_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw std::invalid_argument("csv: empty runs file");
    }
    expect_header(line, "algorithm,function,run,seed,iterations,evaluations,final_best,wall_time_s");
    std::vector<RunRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 8) {
            throw std::invalid_argument("csv: malformed runs row '" + line + "'");
        }
        RunRow row;
        row.algorithm = f[0];
        row.function = f[1];
        row.run_index = parse_u64(f[2]);
        row.seed = parse_u64(f[3]);
        row.iterations = parse_u64(f[4]);
        row.evaluations = parse_u64(f[5]);
        row.final_best = parse_double(f[6]);
        row.wall_time_seconds = parse_double(f[7]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_traces_csv(std::span<const RunRecord> records, std::ostream& os) {
    os << "algorithm,function,run,iteration,best\n";
    for (const RunRecord& r : records) {
        for (std::size_t i = 0; i < r.best_per_iteration.size(); ++i) {
            os << r.algorithm << ',' << r.function << ',' << r.run_index << ',' << i + 1 << ','
               << format_full(r.best_per_iteration[i]) << '\n';
        }
    }
}

std::vector<TraceRow> read_traces_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw std::invalid_argument("csv: empty traces file");
    }
    expect_header(line, "algorithm,function,run,iteration,best");
    std::vector<TraceRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 5) {
            throw std::invalid_argument("csv: malformed trace row '" + line + "'");
        }
        rows.push_back({f[0], f[1], parse_u64(f[2]), parse_u64(f[3]), parse_double(f[4])});
    }
    return rows;
}

std::vector<std::pair<std::uint64_t, double>> convergence_trace(const RunRecord& record) {
    std::vector<std::pair<std::uint64_t, double>> rows;
    rows.reserve(record.best_per_iteration.size());
    for (std::size_t i = 0; i < record.best_per_iteration.size(); ++i) {
        rows.emplace_back(i + 1, record.best_per_iteration[i]);
    }
    return rows;
}

void write_trace_csv(const RunRecord& record, std::ostream& os) {
    const auto rows = convergence_trace(record);
    write_trace_csv(rows, os);
}

void write_trace_csv(std::span<const std::pair<std::uint64_t, double>> rows, std::ostream& os) {
    os << "iteration,best\n";
    for (const auto& [iteration, best] : rows) {
        os << iteration << ',' << format_full(best) << '\n';
    }
}

void write_summary_csv(const SummaryTable& table, std::ostream& os) {
    os << "algorithm,function,n,mean,std,best,worst\n";
    for (const SummaryCell& c : table.cells) {
        os << c.algorithm << ',' << c.function << ',' << c.n << ',' << format_full(c.mean) << ','
           << format_full(c.stddev) << ',' << format_full(c.best) << ',' << format_full(c.worst)
           << '\n';
    }
}

std::string summary_to_json(const SummaryTable& table) {
    nlohmann::json cells = nlohmann::json::array();
    for (const SummaryCell& c : table.cells) {
        cells.push_back({{"algorithm", c.algorithm},
                         {"function", c.function},
                         {"n", c.n},
                         {"mean", c.mean},
                         {"std", c.stddev},
                         {"best", c.best},
                         {"worst", c.worst}});
    }
    return nlohmann::json{{"cells", cells}}.dump(2) + "\n";
}

} // namespace accs
