#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

using PointSet = std::vector<Point>;

/// A permutation group given by generators, all of one degree.
class GeneratedGroup {
 public:
  /// Throws std::invalid_argument on an empty generator list or mixed degrees.
  explicit GeneratedGroup(std::vector<Permutation> generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

 private:
  int degree_;
  std::vector<Permutation> generators_;
};

/// A partition of {1..d} into classes of equal size permuted by the group.
/// Serialized as sorted classes sorted by minimum.
class BlockSystem {
 public:
  /// Throws std::invalid_argument unless the classes partition {1..d} into
  /// equal-size sets.
  BlockSystem(int degree, std::vector<PointSet> blocks);

  int degree() const noexcept { return degree_; }
  const std::vector<PointSet>& blocks() const noexcept { return blocks_; }
  std::size_t block_size() const noexcept { return blocks_.front().size(); }

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;

 private:
  int degree_;
  std::vector<PointSet> blocks_;
};

/// Orbits, each sorted, listed by minimum.
std::vector<PointSet> orbits(const GeneratedGroup& group);

bool is_transitive(const GeneratedGroup& group);

/// Smallest block containing x and y, by union-find refinement.
/// Throws std::invalid_argument if the group is intransitive or x == y.
PointSet minimal_block_containing(const GeneratedGroup& group, Point x, Point y);

struct Primitivity {
  bool primitive = false;
  std::optional<PointSet> block;  // a non-trivial block when imprimitive
};

/// Tests the minimal blocks of {1, y} for every y != 1.
/// Throws std::invalid_argument if intransitive or of degree < 2.
Primitivity is_primitive(const GeneratedGroup& group);

/// True if every group element maps `candidate` onto itself or to a disjoint set.
bool is_block(const GeneratedGroup& group, std::span<const Point> candidate);

/// The translates of a block. Throws std::invalid_argument if not a block.
BlockSystem block_system_from(const GeneratedGroup& group, std::span<const Point> block);

/// All group elements, identity first, in breadth-first order over the
/// generators. Throws CapExceeded beyond `cap` elements.
std::vector<Permutation> elements(const GeneratedGroup& group, std::size_t cap = 20'000);

/// Checks that <G_x, g> = G for every g outside the stabilizer G_x.
/// Throws CapExceeded if |G| > cap, std::invalid_argument if intransitive.
bool stabilizer_is_maximal(const GeneratedGroup& group, Point x, std::size_t cap = 20'000);

/// Some lambda with conjugate(p, lambda) == q, or nullopt if the cycle types
/// differ. Throws std::invalid_argument on degree mismatch.
std::optional<Permutation> conjugator(const Permutation& p, const Permutation& q);

}  // namespace hurwitz
