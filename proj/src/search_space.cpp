#include "accs/search_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace accs {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw std::invalid_argument("SearchSpace: dimension must be at least 1");
    }
    if (lower_.size() != upper_.size()) {
        throw std::invalid_argument("SearchSpace: bound vectors differ in length");
    }
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] < upper_[j])) {
            throw std::invalid_argument("SearchSpace: lower[" + std::to_string(j) +
                                        "] must be strictly below upper[" + std::to_string(j) + "]");
        }
    }
}

SearchSpace SearchSpace::uniform_box(std::size_t dim, double lower, double upper) {
    return SearchSpace(std::vector<double>(dim, lower), std::vector<double>(dim, upper));
}

bool SearchSpace::is_uniform() const noexcept {
    for (std::size_t j = 1; j < lower_.size(); ++j) {
        if (lower_[j] != lower_[0] || upper_[j] != upper_[0]) {
            return false;
        }
    }
    return true;
}

void SearchSpace::require_dim(std::size_t n) const {
    if (n != dim()) {
        throw std::invalid_argument("SearchSpace: expected vector of length " +
                                    std::to_string(dim()) + ", got " + std::to_string(n));
    }
}

bool SearchSpace::contains(std::span<const double> x) const {
    require_dim(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < lower_[j] || x[j] > upper_[j]) {
            return false;
        }
    }
    return true;
}

std::vector<double> SearchSpace::clamp(std::span<const double> x) const {
    require_dim(x.size());
    std::vector<double> out(x.begin(), x.end());
    clamp_in_place(out);
    return out;
}

void SearchSpace::clamp_in_place(std::vector<double>& x) const {
    require_dim(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = std::clamp(x[j], lower_[j], upper_[j]);
    }
}

std::vector<double> SearchSpace::sample(RngStream& rng) const {
    std::vector<double> out(dim());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = rng.uniform(lower_[j], upper_[j]);
    }
    return out;
}

} // namespace accs
