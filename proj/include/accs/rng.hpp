#pragma once

#include <array>
#include <cstdint>

namespace accs {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// The generator is a self-contained xoshiro256++ seeded through SplitMix64,
/// so identical keys reproduce the same draw sequence bit-for-bit on every
/// platform and build. Distinct stream ids give statistically independent
/// sequences; parallel code splits work by stream id instead of sharing a
/// stream. A stream must never be consumed by two threads at once.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53-bit resolution.
    double unit();

    /// Uniform in [lo, hi); returns lo when lo == hi.
    /// Throws std::invalid_argument when lo > hi.
    double uniform(double lo, double hi);

    /// Uniform integer in [lo, hi], both ends included.
    /// Throws std::invalid_argument when lo > hi.
    std::int64_t int_inclusive(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::array<std::uint64_t, 4> state_;
};

} // namespace accs
