#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/branch_data.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// Classification of even-degree branch data over the projective plane.

enum class Verdict { NotAdmissible, IndecomposableRealizable, OnlyDecomposable, UnknownOddDegree };

/// Which clause makes the data realizable by an indecomposable covering.
/// ExhaustiveSearch marks verdicts settled by the small-degree oracle.
enum class RealizableCase { None, DegreeTwo, SomeRowNotAllTwos, BigDegreeManyRows, ExhaustiveSearch };

/// Why every realization is decomposable.
enum class DecomposableReason { None, TwoAllTwosRows, DegreeFourAllTwos, ExhaustiveSearch };

struct Classification {
  Verdict verdict = Verdict::UnknownOddDegree;
  RealizableCase realizable_case = RealizableCase::None;
  DecomposableReason reason = DecomposableReason::None;
  std::string detail;

  /// e.g. "IndecomposableRealizable(DegreeTwo)".
  std::string to_string() const;

  friend bool operator==(const Classification& a, const Classification& b) {
    return a.verdict == b.verdict && a.realizable_case == b.realizable_case && a.reason == b.reason;
  }
};

std::string to_string(Verdict v);
std::string to_string(RealizableCase c);
std::string to_string(DecomposableReason r);

/// Decides indecomposable realizability for even d from the rows alone.
/// Odd d yields UnknownOddDegree (after the admissibility gate).
Classification classify(const BranchData& data);

// ---------------------------------------------------------------------------
// Constructive machinery.

/// (1 2)(3 4)...(d-1 d) and (2 3)(4 5)...(d-2 d-1)(d 1). Throws
/// std::invalid_argument unless d is even and >= 4.
std::pair<Permutation, Permutation> canonical_involution_pair(int d);

/// Target for a pair (a, b) with a, b of prescribed cycle types. Unset
/// fields are unconstrained; `orbits` counts orbits of <a, b>; the product
/// constraints apply to compose(a, b).
struct PairGoal {
  std::optional<int> orbits;
  std::optional<int> product_defect;
  std::optional<Partition> product_type;

  /// t orbits and product defect d - t.
  static PairGoal orbit_count(int degree, int t);
  /// Transitive and product defect (d - 1) - k.
  static PairGoal transitive_with_defect(int degree, int k);
  /// Transitive with product of type [d-1, 1].
  static PairGoal transitive_near_full_cycle(int degree);
  static PairGoal product_defect_only(int defect);

  std::string to_string() const;
};

bool meets_goal(const Permutation& a, const Permutation& b, const PairGoal& goal);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SearchOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Backtracking nodes per restart.
  std::size_t node_budget = 20'000;
  /// Restarts per pair search; the first restart scans points in ascending order.
  int restarts = 48;
  /// Alternative schedules tried after the proof-guided fold fails.
  int fallback_attempts = 64;
};

/// Returns (canonical_element(a_type), b) with b of type b_type meeting the
/// goal. Throws SearchExhausted if the search budget runs out.
std::pair<Permutation, Permutation> assemble_pair(const Partition& a_type, const Partition& b_type,
                                                  const PairGoal& goal, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Witnesses and certificates.

/// A Hurwitz tuple: gammas[0] * ... * gammas[s-1] == alpha^-2, with
/// gammas[i] of the cycle type of input row row_order[i].
struct HurwitzWitness {
  int degree = 0;
  Permutation alpha;
  std::vector<Permutation> gammas;
  std::vector<int> row_order;  // witness position -> input row index
};

struct Certificate {
  bool relation_ok = false;
  bool row_types_ok = false;
  bool transitive = false;
  bool primitive = false;
  std::optional<PointSet> witness_block;
  int euler_char = 0;
  std::vector<int> row_permutation_applied;  // input row index -> witness position

  bool all_ok() const noexcept { return relation_ok && row_types_ok && transitive && primitive; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Recomputes every fact from the witness alone. Never throws on bad
/// witnesses; failures show up as false fields.
Certificate verify_witness(const BranchData& data, const HurwitzWitness& witness);

enum class EnginePath { ProofGuided, Fallback, DecomposableSearch };
std::string to_string(EnginePath path);

/// One step of the fold: the running product times the next row.
struct FoldStep {
  int row = 0;  // input row index
  std::string goal;
  int product_defect = 0;
  int remaining_defect = 0;  // defect of the rows not yet folded in
};

struct Realization {
  HurwitzWitness witness;
  Certificate certificate;
  EnginePath path = EnginePath::ProofGuided;
  std::uint64_t seed = kDefaultSeed;
  std::vector<FoldStep> trace;
};

/// Builds a witness with transitive, primitive monodromy. Throws
/// std::invalid_argument unless classify() says IndecomposableRealizable
/// (ExhaustiveSearch verdicts are rejected too), SearchExhausted if every
/// schedule fails.
Realization realize_indecomposable(const BranchData& data, const SearchOptions& options = {});

/// Random search for a witness whose monodromy is transitive but
/// imprimitive. nullopt when inadmissible, when d has no non-trivial
/// divisor, or when `budget` tuples fail.
std::optional<Realization> realize_decomposable_search(const BranchData& data, std::size_t budget = 20'000,
                                                       std::uint64_t seed = kDefaultSeed);

}  // namespace hurwitz
