#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// The class representative (1 .. p1)(p1+1 .. p1+p2)... with parts in
/// non-increasing order.
Permutation canonical_element(const Partition& cycle_type);

/// Number of permutations with the given cycle type.
std::size_t class_size(const Partition& cycle_type);

/// Every permutation of the given cycle type, in a fixed order (cycles are
/// opened at the smallest unused point). Throws CapExceeded beyond `cap`.
std::vector<Permutation> class_elements(const Partition& cycle_type, std::size_t cap = 1'000'000);

}  // namespace hurwitz
