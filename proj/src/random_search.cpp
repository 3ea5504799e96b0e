#include "accs/random_search.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

namespace accs {

RunRecord random_search(const Objective& objective, const SearchSpace& space,
                        std::uint64_t budget, RngStream& rng) {
    if (budget == 0) {
        throw std::invalid_argument("random_search: budget must be at least 1");
    }
    const auto start = std::chrono::steady_clock::now();

    RunRecord record;
    record.seed = rng.stream_id();
    record.best_per_iteration.reserve(budget);
    double best = 0.0;
    for (std::uint64_t i = 0; i < budget; ++i) {
        const std::vector<double> x = space.sample(rng);
        const double f = evaluate_checked(objective, x);
        if (i == 0 || f < best) {
            best = f;
            record.best_position = x;
        }
        record.best_per_iteration.push_back(best);
    }

    record.best_fitness = best;
    record.evaluations = budget;
    record.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

} // namespace accs
