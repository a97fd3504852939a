#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Branch data over the projective plane: one non-trivial partition of the
/// degree per branch point. Row order is kept as given.
class BranchData {
 public:
  /// Throws std::invalid_argument if there are no rows, a row has the wrong
  /// degree, or a row is trivial.
  BranchData(int degree, std::vector<Partition> rows);

  int degree() const noexcept { return degree_; }
  const std::vector<Partition>& rows() const noexcept { return rows_; }
  int row_count() const noexcept { return static_cast<int>(rows_.size()); }

  /// "d=4; [2,2],[2,2]" — reparses to an equal value.
  std::string to_string() const;

  friend bool operator==(const BranchData&, const BranchData&) = default;

 private:
  int degree_;
  std::vector<Partition> rows_;
};

int nu_partition(const Partition& row);

/// Sum of nu over rows.
int total_defect(const BranchData& data);

enum class AdmissibilityFailure { None, DefectTooSmall, OddDefect };

struct Admissibility {
  bool admissible = false;
  AdmissibilityFailure failure = AdmissibilityFailure::None;
  int total_defect = 0;
  std::string reason;
};

/// d - 1 <= nu(D) and nu(D) even.
Admissibility is_admissible(const BranchData& data);

/// chi(M) = d - nu(D) for a connected covering of the projective plane.
/// Throws std::invalid_argument on inadmissible data.
int euler_char_covering(const BranchData& data);

/// Checks sum_rows(#parts) == chi(M) - d(1 - s), the preimage count of the
/// branch set. Throws std::invalid_argument on inadmissible data.
bool preimage_count_check(const BranchData& data);

/// Grammar: "d=" INT ";" row ("," row)*, row := "[" INT ("," INT)* "]".
/// Whitespace anywhere between tokens. Throws ParseError.
BranchData parse_branch_data(std::string_view text);

}  // namespace hurwitz
