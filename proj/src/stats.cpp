#include "accs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace accs {

namespace {

template <typename T>
void append_unique(std::vector<T>& out, const T& value) {
    if (std::find(out.begin(), out.end(), value) == out.end()) {
        out.push_back(value);
    }
}

SummaryCell make_cell(std::string algorithm, std::string function,
                      const std::vector<double>& finals) {
    SummaryCell cell;
    cell.algorithm = std::move(algorithm);
    cell.function = std::move(function);
    cell.n = finals.size();
    double sum = 0.0;
    for (const double v : finals) {
        sum += v;
    }
    cell.mean = sum / static_cast<double>(finals.size());
    double sq = 0.0;
    for (const double v : finals) {
        const double d = v - cell.mean;
        sq += d * d;
    }
    cell.stddev = finals.size() > 1
                      ? std::sqrt(sq / static_cast<double>(finals.size() - 1))
                      : 0.0;
    cell.best = *std::min_element(finals.begin(), finals.end());
    cell.worst = *std::max_element(finals.begin(), finals.end());
    return cell;
}

template <typename Row>
SummaryTable summarize_impl(std::span<const Row> rows,
                            double (*final_of)(const Row&)) {
    if (rows.empty()) {
        throw std::invalid_argument("summarize: no run data");
    }
    std::vector<std::pair<std::string, std::string>> keys; // (function, algorithm)
    std::vector<std::vector<double>> finals;
    for (const Row& row : rows) {
        const std::pair<std::string, std::string> key{row.function, row.algorithm};
        auto it = std::find(keys.begin(), keys.end(), key);
        if (it == keys.end()) {
            keys.push_back(key);
            finals.emplace_back();
            it = keys.end() - 1;
        }
        finals[static_cast<std::size_t>(it - keys.begin())].push_back(final_of(row));
    }
    SummaryTable table;
    table.cells.reserve(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        table.cells.push_back(make_cell(keys[i].second, keys[i].first, finals[i]));
    }
    return table;
}

// NaN means sort behind every finite mean and tie with each other.
bool mean_less(double a, double b) {
    if (std::isnan(a)) {
        return false;
    }
    if (std::isnan(b)) {
        return true;
    }
    return a < b;
}

bool mean_equal(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) {
        return true;
    }
    return a == b;
}

RankTable aggregate(std::vector<FunctionRanking> per_function,
                    std::vector<std::string> algorithms) {
    RankTable table;
    table.per_function = std::move(per_function);
    table.algorithms = std::move(algorithms);
    table.rank_sum.assign(table.algorithms.size(), 0.0);
    for (const FunctionRanking& ranking : table.per_function) {
        for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
            table.rank_sum[a] += ranking.rank_of(table.algorithms[a]);
        }
    }
    const double n_functions = static_cast<double>(table.per_function.size());
    table.overall_average.resize(table.algorithms.size());
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
        table.overall_average[a] = table.rank_sum[a] / n_functions;
    }

    for (const char* category : {"unimodal", "multimodal", "fixed-dimension"}) {
        std::vector<const FunctionRanking*> members;
        for (const FunctionRanking& ranking : table.per_function) {
            if (classical_category(ranking.function) == category) {
                members.push_back(&ranking);
            }
        }
        if (members.empty()) {
            continue;
        }
        std::vector<double> averages(table.algorithms.size(), 0.0);
        for (const FunctionRanking* ranking : members) {
            for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
                averages[a] += ranking->rank_of(table.algorithms[a]);
            }
        }
        for (double& v : averages) {
            v /= static_cast<double>(members.size());
        }
        table.categories.emplace_back(category);
        table.category_average.push_back(std::move(averages));
    }
    return table;
}

FunctionRanking rank_groups(std::string function,
                            std::vector<std::vector<std::string>> groups) {
    FunctionRanking ranking;
    ranking.function = std::move(function);
    ranking.groups = std::move(groups);
    std::size_t placed = 0;
    for (const std::vector<std::string>& group : ranking.groups) {
        const double rank = static_cast<double>(placed + 1);
        for (const std::string& algorithm : group) {
            ranking.algorithms.push_back(algorithm);
            ranking.ranks.push_back(rank);
        }
        placed += group.size();
    }
    return ranking;
}

} // namespace

const SummaryCell* SummaryTable::find(std::string_view function,
                                      std::string_view algorithm) const {
    for (const SummaryCell& cell : cells) {
        if (cell.function == function && cell.algorithm == algorithm) {
            return &cell;
        }
    }
    return nullptr;
}

std::vector<std::string> SummaryTable::algorithms() const {
    std::vector<std::string> out;
    for (const SummaryCell& cell : cells) {
        append_unique(out, cell.algorithm);
    }
    return out;
}

std::vector<std::string> SummaryTable::functions() const {
    std::vector<std::string> out;
    for (const SummaryCell& cell : cells) {
        append_unique(out, cell.function);
    }
    return out;
}

SummaryTable summarize(std::span<const RunRecord> records) {
    return summarize_impl<RunRecord>(records,
                                     [](const RunRecord& r) { return r.best_fitness; });
}

SummaryTable summarize(std::span<const RunRow> rows) {
    return summarize_impl<RunRow>(rows, [](const RunRow& r) { return r.final_best; });
}

double FunctionRanking::rank_of(std::string_view algorithm) const {
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        if (algorithms[i] == algorithm) {
            return ranks[i];
        }
    }
    throw std::invalid_argument("FunctionRanking: unknown algorithm " + std::string(algorithm));
}

std::vector<std::string> FunctionRanking::order() const {
    std::vector<std::string> out;
    for (const std::vector<std::string>& group : groups) {
        out.insert(out.end(), group.begin(), group.end());
    }
    return out;
}

double RankTable::overall_of(std::string_view algorithm) const {
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        if (algorithms[i] == algorithm) {
            return overall_average[i];
        }
    }
    throw std::invalid_argument("RankTable: unknown algorithm " + std::string(algorithm));
}

RankTable rank_algorithms(const SummaryTable& summary) {
    const std::vector<std::string> algorithms = summary.algorithms();
    const std::vector<std::string> functions = summary.functions();
    if (algorithms.empty() || functions.empty()) {
        throw std::invalid_argument("rank_algorithms: empty summary");
    }

    std::vector<FunctionRanking> per_function;
    per_function.reserve(functions.size());
    for (const std::string& function : functions) {
        std::vector<std::pair<std::string, double>> means;
        means.reserve(algorithms.size());
        for (const std::string& algorithm : algorithms) {
            const SummaryCell* cell = summary.find(function, algorithm);
            if (cell == nullptr) {
                throw std::invalid_argument("rank_algorithms: missing cell " + function + "/" +
                                            algorithm);
            }
            means.emplace_back(algorithm, cell->mean);
        }
        std::stable_sort(means.begin(), means.end(),
                         [](const auto& a, const auto& b) { return mean_less(a.second, b.second); });
        std::vector<std::vector<std::string>> groups;
        for (std::size_t i = 0; i < means.size(); ++i) {
            if (i == 0 || !mean_equal(means[i].second, means[i - 1].second)) {
                groups.emplace_back();
            }
            groups.back().push_back(means[i].first);
        }
        per_function.push_back(rank_groups(function, std::move(groups)));
    }
    return aggregate(std::move(per_function), algorithms);
}

RankTable rank_from_orders(
    std::span<const std::pair<std::string, std::vector<std::vector<std::string>>>> orders) {
    if (orders.empty()) {
        throw std::invalid_argument("rank_from_orders: no functions");
    }
    std::vector<std::string> algorithms;
    for (const auto& group : orders.front().second) {
        for (const std::string& algorithm : group) {
            append_unique(algorithms, algorithm);
        }
    }
    std::vector<FunctionRanking> per_function;
    per_function.reserve(orders.size());
    for (const auto& [function, groups] : orders) {
        FunctionRanking ranking = rank_groups(function, groups);
        if (ranking.algorithms.size() != algorithms.size()) {
            throw std::invalid_argument("rank_from_orders: inconsistent algorithm set for " +
                                        function);
        }
        per_function.push_back(std::move(ranking));
    }
    return aggregate(std::move(per_function), algorithms);
}

std::string_view classical_category(std::string_view function_id) {
    if (function_id.size() < 2 || function_id[0] != 'F') {
        return "";
    }
    int number = 0;
    for (std::size_t i = 1; i < function_id.size(); ++i) {
        const char c = function_id[i];
        if (c < '0' || c > '9') {
            return "";
        }
        number = number * 10 + (c - '0');
    }
    if (number >= 1 && number <= 7) {
        return "unimodal";
    }
    if (number >= 8 && number <= 13) {
        return "multimodal";
    }
    if (number >= 14 && number <= 19) {
        return "fixed-dimension";
    }
    return "";
}

} // namespace accs
