#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// A permutation is a square iff, for every even length, it has an even
/// number of cycles of that length.
bool is_square(const Permutation& p);
bool is_square(const Partition& cycle_type);

/// The root of an odd-length cycle that is again a cycle on the same support:
/// a_i -> a_{i + (r+1)/2}. `degree` must cover every point of the cycle.
/// Throws std::invalid_argument for even length or out-of-range points.
Permutation sqrt_odd_cycle(const Cycle& cycle, int degree);

/// One canonical root: odd cycles are rooted in place, equal-length even
/// cycles are paired by ascending minimum and interleaved.
std::optional<Permutation> sqrt(const Permutation& p);

/// Every beta with beta^2 == p, without duplicates, in a deterministic order.
/// Throws CapExceeded if there are more than `cap`.
std::vector<Permutation> all_square_roots(const Permutation& p, std::size_t cap = 100'000);

}  // namespace hurwitz
