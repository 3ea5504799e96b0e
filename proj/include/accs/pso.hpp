#pragma once

#include <span>
#include <vector>

#include "accs/algorithm.hpp"
#include "accs/run_record.hpp"
#include "accs/search_space.hpp"

namespace accs {

/// Canonical global-best PSO (constriction-equivalent defaults). Ships as an
/// in-repo sanity comparator; published comparison numbers stay external.
struct PsoParams {
    double inertia = 0.7298;
    double cognitive = 1.49618;
    double social = 1.49618;
    std::size_t pop_size = 30;
    std::size_t max_iterations = 500;
    double vmax_fraction = 0.5; // velocity cap as a fraction of box width

    void validate() const; // throws std::invalid_argument
};

/// Velocity update with injected per-coordinate draws (testing hook):
///   v' = w*v + c1*r1.*(pbest - x) + c2*r2.*(gbest - x), clipped to +-vmax.
/// Throws std::invalid_argument on dimension mismatch.
std::vector<double> pso_velocity_update(std::span<const double> velocity,
                                        std::span<const double> position,
                                        std::span<const double> personal_best,
                                        std::span<const double> global_best,
                                        const PsoParams& params,
                                        std::span<const double> r1, std::span<const double> r2,
                                        std::span<const double> vmax);

/// Kinematic step for the whole swarm: fresh draws per particle, velocity
/// clip, position clamp. Best bookkeeping is the caller's job.
void pso_step(std::vector<std::vector<double>>& positions,
              std::vector<std::vector<double>>& velocities,
              const std::vector<std::vector<double>>& personal_bests,
              std::span<const double> global_best, const PsoParams& params,
              const SearchSpace& space, RngStream& rng);

/// Full PSO run with RunRecord semantics matching the other optimizers.
RunRecord pso_optimize(const Objective& objective, const SearchSpace& space,
                       const PsoParams& params, RngStream& rng);

} // namespace accs
