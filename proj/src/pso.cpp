#include "accs/pso.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace accs {

void PsoParams::validate() const {
    if (pop_size < 1) {
        throw std::invalid_argument("PsoParams: pop_size must be at least 1");
    }
    if (inertia < 0.0 || inertia > 1.0) {
        throw std::invalid_argument("PsoParams: inertia must be in [0, 1]");
    }
    if (cognitive < 0.0 || social < 0.0) {
        throw std::invalid_argument("PsoParams: acceleration coefficients must be non-negative");
    }
    if (!(vmax_fraction > 0.0)) {
        throw std::invalid_argument("PsoParams: vmax_fraction must be positive");
    }
}

std::vector<double> pso_velocity_update(std::span<const double> velocity,
                                        std::span<const double> position,
                                        std::span<const double> personal_best,
                                        std::span<const double> global_best,
                                        const PsoParams& params,
                                        std::span<const double> r1, std::span<const double> r2,
                                        std::span<const double> vmax) {
    const std::size_t dim = velocity.size();
    if (position.size() != dim || personal_best.size() != dim || global_best.size() != dim ||
        r1.size() != dim || r2.size() != dim || vmax.size() != dim) {
        throw std::invalid_argument("pso_velocity_update: dimension mismatch");
    }
    std::vector<double> out(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const double v = params.inertia * velocity[j] +
                         params.cognitive * r1[j] * (personal_best[j] - position[j]) +
                         params.social * r2[j] * (global_best[j] - position[j]);
        out[j] = std::clamp(v, -vmax[j], vmax[j]);
    }
    return out;
}

namespace {

std::vector<double> velocity_cap(const SearchSpace& space, double fraction) {
    std::vector<double> vmax(space.dim());
    for (std::size_t j = 0; j < vmax.size(); ++j) {
        vmax[j] = fraction * (space.upper()[j] - space.lower()[j]);
    }
    return vmax;
}

} // namespace

void pso_step(std::vector<std::vector<double>>& positions,
              std::vector<std::vector<double>>& velocities,
              const std::vector<std::vector<double>>& personal_bests,
              std::span<const double> global_best, const PsoParams& params,
              const SearchSpace& space, RngStream& rng) {
    if (positions.size() != velocities.size() || positions.size() != personal_bests.size()) {
        throw std::invalid_argument("pso_step: swarm container sizes differ");
    }
    const std::vector<double> vmax = velocity_cap(space, params.vmax_fraction);
    std::vector<double> r1(space.dim());
    std::vector<double> r2(space.dim());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (double& r : r1) {
            r = rng.unit();
        }
        for (double& r : r2) {
            r = rng.unit();
        }
        velocities[i] = pso_velocity_update(velocities[i], positions[i], personal_bests[i],
                                            global_best, params, r1, r2, vmax);
        for (std::size_t j = 0; j < positions[i].size(); ++j) {
            positions[i][j] += velocities[i][j];
        }
        space.clamp_in_place(positions[i]);
    }
}

RunRecord pso_optimize(const Objective& objective, const SearchSpace& space,
                       const PsoParams& params, RngStream& rng) {
    params.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::vector<double>> positions(params.pop_size);
    std::vector<std::vector<double>> velocities(params.pop_size,
                                                std::vector<double>(space.dim(), 0.0));
    std::vector<std::vector<double>> personal_bests(params.pop_size);
    std::vector<double> personal_fit(params.pop_size);

    std::uint64_t evaluations = 0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < params.pop_size; ++i) {
        positions[i] = space.sample(rng);
        personal_bests[i] = positions[i];
        personal_fit[i] = evaluate_checked(objective, positions[i]);
        ++evaluations;
        if (personal_fit[i] < personal_fit[best_index]) {
            best_index = i;
        }
    }
    std::vector<double> global_best = personal_bests[best_index];
    double global_fit = personal_fit[best_index];

    RunRecord record;
    record.seed = rng.stream_id();
    record.best_per_iteration.reserve(params.max_iterations);
    for (std::size_t t = 0; t < params.max_iterations; ++t) {
        pso_step(positions, velocities, personal_bests, global_best, params, space, rng);
        for (std::size_t i = 0; i < params.pop_size; ++i) {
            const double f = evaluate_checked(objective, positions[i]);
            ++evaluations;
            if (f < personal_fit[i]) {
                personal_fit[i] = f;
                personal_bests[i] = positions[i];
                if (f < global_fit) {
                    global_fit = f;
                    global_best = positions[i];
                }
            }
        }
        record.best_per_iteration.push_back(global_fit);
    }

    record.best_position = global_best;
    record.best_fitness = global_fit;
    record.evaluations = evaluations;
    record.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

} // namespace accs
