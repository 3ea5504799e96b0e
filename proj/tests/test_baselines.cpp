#include <doctest.h>

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "accs/pso.hpp"
#include "accs/random_search.hpp"

using namespace accs;

namespace {

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) {
        s += v * v;
    }
    return s;
}

} // namespace

TEST_CASE("velocity update fixed point") {
    const PsoParams params;
    const std::vector<double> zero{0.0, 0.0};
    const std::vector<double> x{1.0, -1.0};
    const std::vector<double> ones{1.0, 1.0};
    const std::vector<double> vmax{50.0, 50.0};
    const auto v = pso_velocity_update(zero, x, x, x, params, ones, ones, vmax);
    CHECK(v == zero);
}

TEST_CASE("velocity update pure inertia") {
    PsoParams params;
    params.inertia = 1.0;
    params.cognitive = 0.0;
    params.social = 0.0;
    const std::vector<double> v{1.0, 0.0};
    const std::vector<double> x{0.0, 0.0};
    const std::vector<double> ones{1.0, 1.0};
    const std::vector<double> vmax{50.0, 50.0};
    const auto out = pso_velocity_update(v, x, x, x, params, ones, ones, vmax);
    CHECK(out == v);
}

TEST_CASE("velocity update hand arithmetic") {
    PsoParams params;
    params.inertia = 0.0;
    params.cognitive = 1.0;
    params.social = 1.0;
    const std::vector<double> v{0.0, 0.0};
    const std::vector<double> x{0.0, 0.0};
    const std::vector<double> pbest{1.0, 0.0};
    const std::vector<double> gbest{0.0, 1.0};
    const std::vector<double> ones{1.0, 1.0};
    const std::vector<double> vmax{50.0, 50.0};
    const auto out = pso_velocity_update(v, x, pbest, gbest, params, ones, ones, vmax);
    CHECK(out == std::vector<double>{1.0, 1.0});
}

TEST_CASE("velocity update clips to vmax and rejects bad dims") {
    PsoParams params;
    params.inertia = 1.0;
    const std::vector<double> v{100.0};
    const std::vector<double> x{0.0};
    const std::vector<double> one{1.0};
    const std::vector<double> vmax{2.5};
    const auto out = pso_velocity_update(v, x, x, x, params, one, one, vmax);
    CHECK(out == std::vector<double>{2.5});
    CHECK_THROWS_AS(pso_velocity_update(v, x, x, x, params, one, std::vector<double>{1.0, 1.0},
                                        vmax),
                    std::invalid_argument);
}

TEST_CASE("pso run solves the sphere comfortably") {
    const SearchSpace box = SearchSpace::uniform_box(30, -100.0, 100.0);
    const PsoParams params;
    RngStream rng(1, 0);
    const RunRecord record = pso_optimize(sphere, box, params, rng);
    CHECK(record.best_fitness < 1e-2);
    CHECK(record.best_per_iteration.size() == 500);
    CHECK(trace_is_monotone(record));
    CHECK(box.contains(record.best_position));
}

TEST_CASE("pso zero-iteration run returns the init best and replays exactly") {
    const SearchSpace box = SearchSpace::uniform_box(5, -10.0, 10.0);
    PsoParams params;
    params.pop_size = 6;
    params.max_iterations = 0;
    RngStream a(4, 1);
    RngStream b(4, 1);
    const RunRecord r1 = pso_optimize(sphere, box, params, a);
    const RunRecord r2 = pso_optimize(sphere, box, params, b);
    CHECK(r1.best_per_iteration.empty());
    CHECK(r1.evaluations == 6);
    CHECK(r1.best_fitness == r2.best_fitness);
    CHECK(r1.best_position == r2.best_position);
}

TEST_CASE("pso replays bit-identically") {
    const SearchSpace box = SearchSpace::uniform_box(10, -30.0, 30.0);
    PsoParams params;
    params.pop_size = 10;
    params.max_iterations = 50;
    RngStream a(6, 2);
    RngStream b(6, 2);
    const RunRecord r1 = pso_optimize(sphere, box, params, a);
    const RunRecord r2 = pso_optimize(sphere, box, params, b);
    CHECK(r1.best_per_iteration == r2.best_per_iteration);
    CHECK(r1.best_position == r2.best_position);
}

TEST_CASE("random search budget semantics") {
    const SearchSpace box = SearchSpace::uniform_box(3, -1.0, 1.0);
    RngStream rng(12, 0);
    CHECK_THROWS_AS(random_search(sphere, box, 0, rng), std::invalid_argument);

    RngStream single(12, 1);
    const RunRecord one = random_search(sphere, box, 1, single);
    RngStream replay(12, 1);
    const std::vector<double> sample = box.sample(replay);
    CHECK(one.best_fitness == sphere(sample));
    CHECK(one.best_position == sample);
    CHECK(one.evaluations == 1);
    CHECK(one.best_per_iteration.size() == 1);
}

TEST_CASE("random search trace is a running minimum") {
    const SearchSpace box = SearchSpace::uniform_box(4, -5.0, 5.0);
    RngStream rng(3, 3);
    const RunRecord record = random_search(sphere, box, 2000, rng);
    CHECK(trace_is_monotone(record));
    CHECK(record.best_fitness == record.best_per_iteration.back());
    RngStream replay(3, 3);
    const RunRecord again = random_search(sphere, box, 2000, replay);
    CHECK(record.best_per_iteration == again.best_per_iteration);
}

TEST_CASE("random search on the 30-dim sphere stays far from zero") {
    const SearchSpace box = SearchSpace::uniform_box(30, -100.0, 100.0);
    RngStream rng(8, 0);
    const RunRecord record = random_search(sphere, box, 60000, rng);
    CHECK(record.best_fitness > 1e3);
}
