#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accs/rng.hpp"
#include "accs/search_space.hpp"

namespace accs {

/// A named objective with its search box and known-optimum metadata.
///
/// Every function is a pure map from position to value except the noisy
/// quartic (F7), which adds a fresh U[0,1) term per evaluation and therefore
/// needs an explicit stream. Evaluation validates dimension but not bounds:
/// the formulas are total, and some reference minimizers sit outside the
/// catalogued box.
class BenchmarkFn {
public:
    BenchmarkFn(std::string id, SearchSpace space, std::optional<double> known_fmin,
                std::function<double(std::span<const double>)> fn, bool additive_noise = false);

    const std::string& id() const noexcept { return id_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    const SearchSpace& space() const noexcept { return space_; }
    std::optional<double> known_fmin() const noexcept { return fmin_; }
    bool stochastic() const noexcept { return additive_noise_; }

    /// Deterministic functions only; throws std::invalid_argument when the
    /// function needs a noise stream.
    double evaluate(std::span<const double> x) const;

    /// Evaluation with a noise stream (consumed only by stochastic functions).
    double evaluate(std::span<const double> x, RngStream& rng) const;

    /// Noise-free view; equals evaluate() for deterministic functions.
    double deterministic_part(std::span<const double> x) const;

private:
    std::string id_;
    SearchSpace space_;
    std::optional<double> fmin_;
    std::function<double(std::span<const double>)> fn_;
    bool additive_noise_;
};

/// Known global optimum of a catalogued function.
struct OptimumRecord {
    std::string function_id;
    std::vector<double> minimizer;
    double fmin = 0.0;
    double tolerance = 1e-3; // |evaluate(minimizer) - fmin| bound
};

/// Piecewise boundary penalty used by the penalized multimodal functions:
/// k*(x-a)^m above a, k*(-x-a)^m below -a, zero in between.
double penalty_u(double x, double a, double k, double m);

/// The 19 classical functions: F1-F7 unimodal (dim 30), F8-F13 multimodal
/// (dim 30), F14-F19 fixed-dimension multimodal.
std::vector<BenchmarkFn> classical_suite();

/// The ten CEC-2019 "100-digit challenge" functions at their base definitions
/// (catalogued dimensions and ranges, internal scale factors, +1 offset).
/// The official per-instance shift/rotation data is not applied, so published
/// shifted-instance results are not reproducible from these.
std::vector<BenchmarkFn> cec2019_suite();

/// classical_suite followed by cec2019_suite.
std::vector<BenchmarkFn> all_benchmarks();

/// nullptr when the id is absent.
const BenchmarkFn* find_benchmark(std::span<const BenchmarkFn> suite, std::string_view id);

/// Reference minimizer and optimum for F1..F19. Throws std::invalid_argument
/// for unknown ids and for CEC ids (no authoritative optimum without the
/// official instance data).
OptimumRecord known_optimum(std::string_view id);

} // namespace accs
