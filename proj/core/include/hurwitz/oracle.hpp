#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hurwitz/branch_data.hpp"
#include "hurwitz/realization.hpp"

namespace hurwitz {

/// Limits for exhaustive enumeration.
struct SearchBounds {
  int max_degree = 6;
  int max_rows = 4;
  std::size_t element_cap = 20'000;
  std::size_t root_cap = 100'000;
  /// Threads used to split the second row's class; results do not depend on it.
  int workers = 1;
};

/// Throws BoundsExceeded if the data lies outside the bounds.
void check_bounds(const BranchData& data, const SearchBounds& bounds);

/// First witness (in enumeration order) whose monodromy group is transitive.
/// gammas[0] is fixed to the canonical class representative of row 0.
std::optional<HurwitzWitness> find_realization(const BranchData& data, const SearchBounds& bounds = {});
bool exists_realization(const BranchData& data, const SearchBounds& bounds = {});

/// First witness whose monodromy group is transitive and primitive.
std::optional<HurwitzWitness> find_primitive_realization(const BranchData& data, const SearchBounds& bounds = {});
bool exists_primitive_realization(const BranchData& data, const SearchBounds& bounds = {});

/// Full count of witnesses (gamma tuple with gammas[0] canonical, plus
/// alpha) split by the monodromy group's transitivity and primitivity.
struct RealizationSurvey {
  std::uint64_t gamma_tuples = 0;
  std::uint64_t square_products = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t intransitive = 0;
  std::uint64_t transitive_primitive = 0;
  std::uint64_t transitive_imprimitive = 0;
  std::optional<HurwitzWitness> sample_intransitive;
  std::optional<HurwitzWitness> sample_primitive;
  std::optional<HurwitzWitness> sample_imprimitive;
  /// Generators (alpha first) of every transitive witness, when requested.
  std::vector<std::vector<Permutation>> transitive_groups;
};

RealizationSurvey survey_realizations(const BranchData& data, const SearchBounds& bounds = {},
                                      bool collect_groups = false);

/// Every ordered pair of fixed-point-free involutions generating a
/// transitive group, checked against the canonical pair.
struct InvolutionSurvey {
  int degree = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t transitive_pairs = 0;
  std::uint64_t imprimitive_pairs = 0;
  std::uint64_t canonical_block_pairs = 0;  // odd points map to a block
  std::uint64_t conjugate_to_canonical = 0;
  std::optional<std::pair<Permutation, Permutation>> sample;
  std::optional<PointSet> sample_block;

  bool confirmed() const noexcept {
    return transitive_pairs > 0 && imprimitive_pairs == transitive_pairs &&
           canonical_block_pairs == transitive_pairs && conjugate_to_canonical == transitive_pairs;
  }
};

/// Throws std::invalid_argument unless d is even and >= 4, BoundsExceeded if
/// d > bounds.max_degree + 2.
InvolutionSurvey involution_pair_survey(int degree, const SearchBounds& bounds = {});

/// Some lambda with conjugate(p, lambda) == p0 and conjugate(q, lambda) == q0
/// for the canonical involution pair (p0, q0); nullopt if <p, q> is not a
/// transitive pair of fixed-point-free involutions.
std::optional<Permutation> pair_conjugator_to_canonical(const Permutation& p, const Permutation& q);

/// Classification from exhaustive search alone; nullopt out of bounds.
std::optional<Classification> classify_by_search(const BranchData& data, const SearchBounds& bounds = {});

/// classify(), with UnknownOddDegree settled by search when within bounds.
Classification classify_with_oracle(const BranchData& data, const SearchBounds& bounds = {});

}  // namespace hurwitz
