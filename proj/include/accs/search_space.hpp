#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "accs/rng.hpp"

namespace accs {

/// Box-constrained decision space: per-dimension lower/upper bounds.
/// Immutable after construction.
class SearchSpace {
public:
    /// Throws std::invalid_argument unless dim >= 1 and lower[j] < upper[j] for all j.
    SearchSpace(std::vector<double> lower, std::vector<double> upper);

    static SearchSpace uniform_box(std::size_t dim, double lower, double upper);

    std::size_t dim() const noexcept { return lower_.size(); }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }

    /// True when every dimension shares the same bounds.
    bool is_uniform() const noexcept;

    bool contains(std::span<const double> x) const;

    /// Projects each out-of-range coordinate onto the nearest bound;
    /// in-range coordinates pass through unchanged. Idempotent.
    std::vector<double> clamp(std::span<const double> x) const;
    void clamp_in_place(std::vector<double>& x) const;

    /// Uniform draw inside the box, one coordinate per dimension in order.
    std::vector<double> sample(RngStream& rng) const;

private:
    void require_dim(std::size_t n) const;

    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// A position vector with its cached objective value.
struct Candidate {
    std::vector<double> position;
    double fitness = 0.0;
};

} // namespace accs
