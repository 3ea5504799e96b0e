#include "accs/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace accs {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t x = seed ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    for (auto& word : state_) {
        word = splitmix64(x);
    }
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    if (lo > hi) {
        throw std::invalid_argument("RngStream::uniform: lo > hi");
    }
    if (lo == hi) {
        return lo;
    }
    const double v = lo + (hi - lo) * unit();
    // Rounding of lo + (hi-lo)*u can land on hi; keep the interval half-open.
    return v < hi ? v : std::nextafter(hi, lo);
}

std::int64_t RngStream::int_inclusive(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("RngStream::int_inclusive: lo > hi");
    }
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {
        // Full 64-bit range.
        return static_cast<std::int64_t>(next_u64());
    }
    // Unbiased modulo: reject draws below 2^64 mod span.
    const std::uint64_t reject = (0ULL - span) % span;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r < reject);
    return lo + static_cast<std::int64_t>(r % span);
}

} // namespace accs
