#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hurwitz {

/// A partition of d: a multiset of positive parts, stored non-increasing.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if any part is < 1 or the list is empty.
  explicit Partition(std::vector<int> parts);

  /// [2,...,2] of the given even degree.
  static Partition all_twos(int degree);
  /// [1,...,1].
  static Partition trivial(int degree);

  int degree() const noexcept { return degree_; }
  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }

  /// Sum of (part - 1), i.e. degree minus number of parts.
  int nu() const noexcept { return degree_ - static_cast<int>(parts_.size()); }
  bool is_trivial() const noexcept { return nu() == 0; }
  bool is_all_twos() const noexcept;
  /// Number of parts equal to `length`.
  int count(int length) const noexcept;

  /// "[3,2,1]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Every partition of `degree`, in reverse lexicographic order ([d] first).
std::vector<Partition> partitions_of(int degree);

}  // namespace hurwitz
