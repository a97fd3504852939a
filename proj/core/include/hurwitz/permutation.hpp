#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// A point of {1,...,d}.
using Point = int;

/// Distinct points, read cyclically: elements[i] maps to elements[i+1].
using Cycle = std::vector<Point>;

/// A bijection of {1,...,d}.
///
/// Points are 1-based. Products act on the right: x^(pq) = (x^p)^q, so in
/// compose(p, q) the permutation p is applied first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// images[x-1] = x^p. Throws std::invalid_argument unless a bijection.
  static Permutation from_images(std::span<const Point> images);
  /// Points not mentioned are fixed. Throws std::invalid_argument on
  /// repeated or out-of-range points.
  static Permutation from_cycles(int degree, std::span<const Cycle> cycles);
  /// Disjoint-cycle text such as "(1 2)(3 4)"; "()" or "" is the identity.
  /// Throws ParseError.
  static Permutation parse(int degree, std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Point operator()(Point x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }

  /// 0-based image table: zero_based()[i] = (i+1)^p - 1.
  std::span<const int> zero_based() const noexcept { return images_; }
  std::vector<Point> images() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Disjoint-cycle notation with fixed points omitted; "()" for identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);

  std::vector<int> images_;
};

/// p first, then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Ordered product p_1 p_2 ... p_k (p_1 applied first).
Permutation compose_all(std::span<const Permutation> factors);

/// lambda * p * lambda^-1 under the right-action product.
Permutation conjugate(const Permutation& p, const Permutation& lambda);

/// Canonical: every cycle starts at its minimum, cycles sorted by minimum,
/// fixed points included as 1-cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

Partition cycle_type(const Permutation& p);

/// d minus the number of cycles (fixed points included).
int defect(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace hurwitz
