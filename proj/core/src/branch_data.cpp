#include "hurwitz/branch_data.hpp"

#include <cctype>
#include <stdexcept>

#include "hurwitz/error.hpp"

namespace hurwitz {

BranchData::BranchData(int degree, std::vector<Partition> rows) : degree_(degree), rows_(std::move(rows)) {
  if (degree_ < 1) throw std::invalid_argument("invalid degree " + std::to_string(degree_));
  if (rows_.empty()) throw std::invalid_argument("branch data needs at least one row");
  for (const Partition& row : rows_) {
    if (row.degree() != degree_) {
      throw std::invalid_argument("row " + row.to_string() + " sums to " + std::to_string(row.degree()) +
                                  ", expected " + std::to_string(degree_));
    }
    if (row.is_trivial()) throw std::invalid_argument("row " + row.to_string() + " is trivial");
  }
}

std::string BranchData::to_string() const {
  std::string out = "d=" + std::to_string(degree_) + "; ";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += rows_[i].to_string();
  }
  return out;
}

int nu_partition(const Partition& row) { return row.nu(); }

int total_defect(const BranchData& data) {
  int sum = 0;
  for (const Partition& row : data.rows()) sum += row.nu();
  return sum;
}

Admissibility is_admissible(const BranchData& data) {
  Admissibility result;
  result.total_defect = total_defect(data);
  const int d = data.degree();
  if (result.total_defect < d - 1) {
    result.failure = AdmissibilityFailure::DefectTooSmall;
    result.reason = "total defect " + std::to_string(result.total_defect) + " < d-1 = " + std::to_string(d - 1);
  } else if (result.total_defect % 2 != 0) {
    result.failure = AdmissibilityFailure::OddDefect;
    result.reason = "total defect " + std::to_string(result.total_defect) + " is odd";
  } else {
    result.admissible = true;
    result.reason = "d-1 = " + std::to_string(d - 1) + " <= " + std::to_string(result.total_defect) + ", even";
  }
  return result;
}

int euler_char_covering(const BranchData& data) {
  const Admissibility adm = is_admissible(data);
  if (!adm.admissible) throw std::invalid_argument("inadmissible branch data: " + adm.reason);
  return data.degree() - adm.total_defect;
}

bool preimage_count_check(const BranchData& data) {
  const int chi = euler_char_covering(data);
  int preimages = 0;
  for (const Partition& row : data.rows()) preimages += static_cast<int>(row.size());
  return preimages == chi - data.degree() * (1 - data.row_count());
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(std::string("expected '") + c + "'" + found(), pos_);
    }
    ++pos_;
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer" + found(), start);
    return static_cast<int>(value);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BranchData parse_branch_data(std::string_view text) {
  Lexer lex(text);
  lex.expect('d');
  lex.expect('=');
  const std::size_t degree_pos = lex.pos();
  const int degree = lex.integer();
  if (degree < 1) throw ParseError("degree must be positive", degree_pos);
  lex.expect(';');

  std::vector<Partition> rows;
  do {
    lex.skip_ws();
    const std::size_t row_pos = lex.pos();
    lex.expect('[');
    std::vector<int> parts;
    do {
      const std::size_t part_pos = lex.pos();
      const int part = lex.integer();
      if (part < 1) throw ParseError("parts must be positive", part_pos);
      parts.push_back(part);
      if (!lex.peek(',')) break;
      lex.expect(',');
    } while (true);
    lex.expect(']');
    Partition row(std::move(parts));
    if (row.degree() != degree) {
      throw ParseError("row " + row.to_string() + " sums to " + std::to_string(row.degree()) + ", expected " +
                           std::to_string(degree),
                       row_pos);
    }
    if (row.is_trivial()) throw ParseError("row " + row.to_string() + " is trivial", row_pos);
    rows.push_back(std::move(row));
    if (!lex.peek(',')) break;
    lex.expect(',');
  } while (true);
  if (!lex.at_end()) throw ParseError("unexpected trailing input", lex.pos());
  return BranchData(degree, std::move(rows));
}

}  // namespace hurwitz
