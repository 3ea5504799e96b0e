#include "accs/algorithm.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "accs/errors.hpp"

namespace accs {

double evaluate_checked(const Objective& objective, std::span<const double> x) {
    const double f = objective(x);
    if (!std::isfinite(f)) {
        throw EvaluationError("objective returned a non-finite value",
                              std::vector<double>(x.begin(), x.end()));
    }
    return f;
}

void AccsParams::validate() const {
    if (pop_size < 4) {
        throw std::invalid_argument("AccsParams: pop_size must be at least 4");
    }
    if (!(hp_constant > 0.0) || hp_constant > 1.0) {
        throw std::invalid_argument("AccsParams: hp_constant must be in (0, 1]");
    }
    if (hp_init < 0.0 || hp_init > 1.0) {
        throw std::invalid_argument("AccsParams: hp_init must be in [0, 1]");
    }
    const bool d1_ok = 0.0 <= d1_min && d1_min <= d1_max && d1_max <= 1.0;
    const bool d2_ok = 0.0 <= d2_min && d2_min <= d2_max && d2_max <= 1.0;
    if (!d1_ok || !d2_ok) {
        throw std::invalid_argument("AccsParams: delay ranges must be non-empty subsets of [0, 1]");
    }
    if (!std::isfinite(normal_flag_threshold)) {
        throw std::invalid_argument("AccsParams: normal_flag_threshold must be finite");
    }
}

double hp_schedule(std::size_t t, std::size_t max_iterations, const AccsParams& params) {
    if (t > max_iterations) {
        throw std::invalid_argument("hp_schedule: iteration " + std::to_string(t) +
                                    " beyond schedule end " + std::to_string(max_iterations));
    }
    if (t == max_iterations) {
        return 0.0;
    }
    const double fraction = static_cast<double>(t) / static_cast<double>(max_iterations);
    return params.hp_init * params.hp_constant * (1.0 - fraction);
}

double impulse_value(const SearchSpace& space, double r) {
    const double lb = space.lower()[0];
    const double ub = space.upper()[0];
    if (ub == 0.0) {
        throw std::invalid_argument("impulse_value: zero upper bound makes the ratio undefined");
    }
    return lb / ub * r;
}

double node_impulse(const SearchSpace& space, RngStream& rng) {
    return impulse_value(space, rng.unit());
}

double node_heart_rate(const SearchSpace& space, RngStream& rng) {
    return impulse_value(space, rng.unit());
}

ConductionFlag draw_conduction_flag(RngStream& rng, const AccsParams& params) {
    const bool healthy = rng.unit() < 0.5;
    const double value = healthy ? rng.uniform(0.0, 0.5) : rng.uniform(0.6, 1.0);
    return {value, value <= params.normal_flag_threshold};
}

std::vector<double> node_update_raw(std::span<const double> x,
                                    std::span<const double> x_star,
                                    double heart_power, NodeKind node, bool normal_update,
                                    const NodeDraws& draws) {
    if (x.size() != x_star.size() || draws.weights.size() != x.size()) {
        throw std::invalid_argument("node_update_raw: dimension mismatch");
    }
    double coeff;
    if (node == NodeKind::AV) {
        coeff = normal_update ? draws.delay : draws.delay * heart_power;
    } else {
        coeff = normal_update ? 1.0 : heart_power;
    }
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = draws.weights[j] * (x[j] - draws.anchor * x_star[j]) - coeff * x[j];
    }
    return out;
}

std::vector<double> node_update(std::span<const double> x, std::span<const double> x_star,
                                double heart_power, NodeKind node, bool normal_update,
                                const AccsParams& params, const SearchSpace& space,
                                RngStream& rng) {
    NodeDraws draws;
    draws.weights.resize(x.size());
    for (double& w : draws.weights) {
        w = rng.unit();
    }
    draws.anchor = rng.unit();
    if (node == NodeKind::AV) {
        draws.delay = normal_update ? rng.uniform(params.d1_min, params.d1_max)
                                    : rng.uniform(params.d2_min, params.d2_max);
    }
    std::vector<double> out = node_update_raw(x, x_star, heart_power, node, normal_update, draws);
    space.clamp_in_place(out);
    return out;
}

std::vector<std::size_t> select_update_order(std::size_t pop_size, RngStream& rng) {
    std::vector<std::size_t> order(pop_size);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = pop_size; i > 1; --i) {
        const auto j = static_cast<std::size_t>(
            rng.int_inclusive(0, static_cast<std::int64_t>(i) - 1));
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

void update_personal_best(AccsState& state, std::size_t i) {
    if (i >= state.population.size()) {
        throw std::out_of_range("update_personal_best: candidate index out of range");
    }
    if (state.population[i].fitness < state.personal_bests[i].fitness) {
        state.personal_bests[i] = state.population[i];
    }
}

void update_global_best(AccsState& state) {
    if (state.personal_bests.empty()) {
        throw std::invalid_argument("update_global_best: empty population");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < state.personal_bests.size(); ++i) {
        if (state.personal_bests[i].fitness < state.personal_bests[best].fitness) {
            best = i;
        }
    }
    state.global_best = state.personal_bests[best];
}

AccsState init_state(const Objective& objective, const SearchSpace& space,
                     const AccsParams& params, RngStream& rng) {
    AccsState state;
    state.population.reserve(params.pop_size);
    for (std::size_t i = 0; i < params.pop_size; ++i) {
        Candidate cand;
        cand.position = space.sample(rng);
        cand.fitness = evaluate_checked(objective, cand.position);
        state.population.push_back(std::move(cand));
    }
    state.personal_bests = state.population;
    update_global_best(state);
    state.iteration = 0;
    state.heart_power = hp_schedule(0, params.max_iterations, params);
    return state;
}

std::uint64_t step(AccsState& state, const Objective& objective, const SearchSpace& space,
                   const AccsParams& params, RngStream& rng) {
    static constexpr NodeKind kNodeOrder[] = {NodeKind::SA, NodeKind::AV, NodeKind::BoH,
                                              NodeKind::PF};
    std::uint64_t evaluations = 0;
    const std::vector<std::size_t> order = select_update_order(state.population.size(), rng);
    for (const std::size_t idx : order) {
        Candidate& cand = state.population[idx];
        for (const NodeKind node : kNodeOrder) {
            const double impulse = node_impulse(space, rng);
            const double heart_rate = node_heart_rate(space, rng);
            const ConductionFlag flag = draw_conduction_flag(rng, params);
            const bool normal_update = heart_rate < impulse || !flag.is_normal;
            cand.position = node_update(cand.position, state.global_best.position,
                                        state.heart_power, node, normal_update, params, space,
                                        rng);
            cand.fitness = evaluate_checked(objective, cand.position);
            ++evaluations;
            update_personal_best(state, idx);
            update_global_best(state);
        }
    }
    ++state.iteration;
    state.heart_power = hp_schedule(state.iteration, params.max_iterations, params);
    return evaluations;
}

RunRecord optimize(const Objective& objective, const SearchSpace& space,
                   const AccsParams& params, RngStream& rng) {
    params.validate();
    if (params.strict_uniform_bounds && !space.is_uniform()) {
        throw std::invalid_argument("optimize: non-uniform bounds rejected in strict mode");
    }
    const auto start = std::chrono::steady_clock::now();

    AccsState state = init_state(objective, space, params, rng);
    std::uint64_t evaluations = params.pop_size;

    RunRecord record;
    record.seed = rng.stream_id();
    record.best_per_iteration.reserve(params.max_iterations);
    for (std::size_t t = 0; t < params.max_iterations; ++t) {
        evaluations += step(state, objective, space, params, rng);
        record.best_per_iteration.push_back(state.global_best.fitness);
    }

    record.best_position = state.global_best.position;
    record.best_fitness = state.global_best.fitness;
    record.evaluations = evaluations;
    record.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

} // namespace accs
