#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "accs/run_record.hpp"
#include "accs/search_space.hpp"

namespace accs {

using Objective = std::function<double(std::span<const double>)>;

/// Evaluates the objective and rejects non-finite results.
/// Throws EvaluationError carrying the offending position.
double evaluate_checked(const Objective& objective, std::span<const double> x);

/// The four conduction stages. Each candidate passes through them in this
/// order (SA, AV, BoH, PF) within a single iteration.
enum class NodeKind { SA, AV, BoH, PF };

struct AccsParams {
    std::size_t pop_size = 30;
    std::size_t max_iterations = 500;
    double hp_init = 0.985;
    double hp_constant = 0.999;
    double d1_min = 0.1; // AV delay range, normal conduction
    double d1_max = 0.2;
    double d2_min = 0.2; // AV delay range, abnormal conduction
    double d2_max = 0.3;
    double normal_flag_threshold = 0.5;
    // Reject non-uniform boxes instead of falling back to the first
    // coordinate's bounds for the impulse ratio.
    bool strict_uniform_bounds = false;

    void validate() const; // throws std::invalid_argument
};

struct AccsState {
    std::vector<Candidate> population;
    std::vector<Candidate> personal_bests;
    Candidate global_best;
    std::size_t iteration = 0;
    double heart_power = 0.0;
};

struct ConductionFlag {
    double value = 0.0;
    bool is_normal = true;
};

/// Stochastic inputs of one node update, injectable for testing.
struct NodeDraws {
    std::vector<double> weights; // per-coordinate multiplier vector
    double anchor = 0.0;         // scalar pull toward the global best
    double delay = 0.0;          // AV delay factor; ignored at other nodes
};

/// Heart-power schedule: hp_init * hp_constant * (1 - t/T).
/// Monotone non-increasing, exactly 0 at t == T.
/// Throws std::invalid_argument when t > max_iterations.
double hp_schedule(std::size_t t, std::size_t max_iterations, const AccsParams& params);

/// Impulse formula (lower/upper * r) using the first coordinate's bounds.
/// Throws std::invalid_argument when the upper bound is zero.
double impulse_value(const SearchSpace& space, double r);

/// Impulse threshold with a fresh unit draw. For symmetric bounds the result
/// lies in [-1, 0].
double node_impulse(const SearchSpace& space, RngStream& rng);

/// Per-node heart rate: same formula as node_impulse with an independent draw.
double node_heart_rate(const SearchSpace& space, RngStream& rng);

/// Conduction health indicator: a fair coin picks the healthy branch, then the
/// flag value is drawn in [0, 0.5] (healthy) or [0.6, 1] (dysfunctional).
/// is_normal is the threshold classification of the drawn value.
ConductionFlag draw_conduction_flag(RngStream& rng, const AccsParams& params);

/// Node update with injected draws, before any bound handling:
///   SA/BoH/PF normal:    w .* (x - a*x_star) - x
///   SA/BoH/PF abnormal:  w .* (x - a*x_star) - hp*x
///   AV normal:           w .* (x - a*x_star) - d*x
///   AV abnormal:         w .* (x - a*x_star) - d*hp*x
/// Throws std::invalid_argument on dimension mismatch.
std::vector<double> node_update_raw(std::span<const double> x,
                                    std::span<const double> x_star,
                                    double heart_power, NodeKind node, bool normal_update,
                                    const NodeDraws& draws);

/// Node update with fresh draws (weights, anchor, then the AV delay when
/// applicable), clamped into the search space.
std::vector<double> node_update(std::span<const double> x, std::span<const double> x_star,
                                double heart_power, NodeKind node, bool normal_update,
                                const AccsParams& params, const SearchSpace& space,
                                RngStream& rng);

/// Uniformly random visitation order over candidate indices 0..pop_size-1.
std::vector<std::size_t> select_update_order(std::size_t pop_size, RngStream& rng);

/// Replaces personal best i iff candidate i strictly improves it.
/// Throws std::out_of_range on a bad index.
void update_personal_best(AccsState& state, std::size_t i);

/// Global best = argmin over personal bests; ties keep the lowest index.
/// Throws std::invalid_argument on an empty population.
void update_global_best(AccsState& state);

/// Uniform random population, evaluated, with personal/global bests set and
/// the heart power at its initial value.
AccsState init_state(const Objective& objective, const SearchSpace& space,
                     const AccsParams& params, RngStream& rng);

/// One full iteration: each candidate, in a fresh random order, passes through
/// the four node updates; fitness is re-evaluated and the personal/global
/// bests refreshed after every update. Advances the iteration counter and the
/// heart power. Returns the number of objective evaluations performed
/// (4 * pop_size).
std::uint64_t step(AccsState& state, const Objective& objective, const SearchSpace& space,
                   const AccsParams& params, RngStream& rng);

/// Full run: initialize, iterate max_iterations steps, record the best-so-far
/// trace. Pure function of (objective, space, params, stream key).
RunRecord optimize(const Objective& objective, const SearchSpace& space,
                   const AccsParams& params, RngStream& rng);

} // namespace accs
