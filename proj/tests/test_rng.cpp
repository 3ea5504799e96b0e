#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "accs/rng.hpp"

using accs::RngStream;

TEST_CASE("uniform degenerate interval returns the endpoint") {
    RngStream rng(1, 0);
    CHECK(rng.uniform(0.0, 0.0) == 0.0);
    CHECK(rng.uniform(-3.5, -3.5) == -3.5);
}

TEST_CASE("uniform draws stay in the half-open interval") {
    RngStream rng(42, 0);
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.0, 1.0);
    CHECK(a != b);
    for (int i = 0; i < 10000; ++i) {
        const double v = rng.uniform(-2.0, 5.0);
        CHECK(v >= -2.0);
        CHECK(v < 5.0);
    }
}

TEST_CASE("uniform rejects inverted ranges") {
    RngStream rng(1, 0);
    CHECK_THROWS_AS(rng.uniform(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("identical keys replay the identical sequence") {
    RngStream a(42, 7);
    RngStream b(42, 7);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    RngStream c(42, 7);
    RngStream d(42, 7);
    for (int i = 0; i < 1000; ++i) {
        CHECK(c.uniform(0.0, 1.0) == d.uniform(0.0, 1.0));
    }
}

TEST_CASE("distinct stream ids diverge") {
    RngStream a(42, 0);
    RngStream b(42, 1);
    int differing = 0;
    for (int i = 0; i < 64; ++i) {
        differing += a.next_u64() != b.next_u64();
    }
    CHECK(differing > 60);
}

TEST_CASE("int_inclusive singleton range") {
    RngStream rng(1, 0);
    for (int i = 0; i < 100; ++i) {
        CHECK(rng.int_inclusive(3, 3) == 3);
    }
}

TEST_CASE("int_inclusive covers [1,30] over 10000 draws") {
    RngStream rng(7, 0);
    std::set<std::int64_t> seen;
    for (int i = 0; i < 10000; ++i) {
        const std::int64_t v = rng.int_inclusive(1, 30);
        CHECK(v >= 1);
        CHECK(v <= 30);
        seen.insert(v);
    }
    CHECK(seen.size() == 30);
}

TEST_CASE("int_inclusive replays deterministically") {
    RngStream a(7, 3);
    RngStream b(7, 3);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.int_inclusive(1, 30) == b.int_inclusive(1, 30));
    }
}

TEST_CASE("int_inclusive rejects inverted ranges") {
    RngStream rng(1, 0);
    CHECK_THROWS_AS(rng.int_inclusive(2, 1), std::invalid_argument);
}

TEST_CASE("int_inclusive handles negative ranges") {
    RngStream rng(9, 0);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t v = rng.int_inclusive(-5, 5);
        CHECK(v >= -5);
        CHECK(v <= 5);
    }
}

TEST_CASE("golden sequences pin the cross-platform contract") {
    // Any change to these values breaks replay of previously recorded runs.
    RngStream a(42, 7);
    const std::uint64_t raw[] = {13416266634005576090ULL, 1717046948029442996ULL,
                                 10393372617692344376ULL, 8320388975482593676ULL};
    for (const std::uint64_t want : raw) {
        CHECK(a.next_u64() == want);
    }
    RngStream b(42, 7);
    const double units[] = {0.72729727156168156, 0.093081301565656305, 0.56342585857766969};
    for (const double want : units) {
        CHECK(b.unit() == want);
    }
    RngStream c(1, 0);
    const std::int64_t ints[] = {7, 7, 14, 19, 24, 1};
    for (const std::int64_t want : ints) {
        CHECK(c.int_inclusive(1, 30) == want);
    }
}

TEST_CASE("unit draws fill [0,1)") {
    RngStream rng(123, 4);
    double lo = 1.0;
    double hi = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double v = rng.unit();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
}
