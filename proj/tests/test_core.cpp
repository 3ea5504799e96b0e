#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "accs/rng.hpp"
#include "accs/run_record.hpp"
#include "accs/search_space.hpp"

using accs::RngStream;
using accs::RunRecord;
using accs::SearchSpace;

TEST_CASE("search space validates its bounds") {
    CHECK_THROWS_AS(SearchSpace({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpace({0.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpace({1.0}, {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpace({0.0, 0.0}, {1.0}), std::invalid_argument);
    const SearchSpace ok({-1.0, 0.0}, {1.0, 2.0});
    CHECK(ok.dim() == 2);
    CHECK_FALSE(ok.is_uniform());
    CHECK(SearchSpace::uniform_box(30, -100.0, 100.0).is_uniform());
}

TEST_CASE("clamp projects onto the nearest bound") {
    const SearchSpace box = SearchSpace::uniform_box(2, -100.0, 100.0);
    CHECK(box.clamp(std::vector<double>{50.0, -50.0}) == std::vector<double>{50.0, -50.0});
    CHECK(box.clamp(std::vector<double>{150.0, -150.0}) == std::vector<double>{100.0, -100.0});
    CHECK(box.clamp(std::vector<double>{0.0, 101.0}) == std::vector<double>{0.0, 100.0});
}

TEST_CASE("clamp rejects dimension mismatches") {
    const SearchSpace box = SearchSpace::uniform_box(2, -1.0, 1.0);
    CHECK_THROWS_AS(box.clamp(std::vector<double>{0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("clamp is idempotent and leaves in-bounds points alone") {
    const SearchSpace box({-3.0, 0.0, -1.0}, {2.0, 10.0, 1.0});
    RngStream rng(5, 0);
    for (int i = 0; i < 500; ++i) {
        std::vector<double> x(3);
        for (double& v : x) {
            v = rng.uniform(-20.0, 20.0);
        }
        const std::vector<double> once = box.clamp(x);
        CHECK(box.contains(once));
        CHECK(box.clamp(once) == once);
        if (box.contains(x)) {
            CHECK(once == x);
        }
    }
}

TEST_CASE("samples are uniform inside the box") {
    const SearchSpace box({-3.0, 5.0}, {-1.0, 6.0});
    RngStream rng(11, 2);
    for (int i = 0; i < 1000; ++i) {
        CHECK(box.contains(box.sample(rng)));
    }
}

TEST_CASE("trace monotonicity helper") {
    RunRecord record;
    record.best_per_iteration = {5.0, 3.0, 3.0, 1.0};
    CHECK(trace_is_monotone(record));
    record.best_per_iteration = {5.0, 3.0, 3.5};
    CHECK_FALSE(trace_is_monotone(record));
    record.best_per_iteration = {};
    CHECK(trace_is_monotone(record));
}
