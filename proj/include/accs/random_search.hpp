#pragma once

#include <cstdint>

#include "accs/algorithm.hpp"
#include "accs/run_record.hpp"
#include "accs/search_space.hpp"

namespace accs {

/// Null-hypothesis comparator: best of `budget` uniform in-bounds samples,
/// with a running-minimum trace (one entry per sample).
/// Throws std::invalid_argument when budget is zero.
RunRecord random_search(const Objective& objective, const SearchSpace& space,
                        std::uint64_t budget, RngStream& rng);

} // namespace accs
