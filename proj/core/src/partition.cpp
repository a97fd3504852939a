#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (int part : parts_) {
    if (part < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::all_twos(int degree) {
  if (degree < 2 || degree % 2 != 0) throw std::invalid_argument("all-twos partition needs even degree");
  return Partition(std::vector<int>(static_cast<std::size_t>(degree / 2), 2));
}

Partition Partition::trivial(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  return Partition(std::vector<int>(static_cast<std::size_t>(degree), 1));
}

bool Partition::is_all_twos() const noexcept {
  return !parts_.empty() && std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 2; });
}

int Partition::count(int length) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), length));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    extend(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  extend(degree, degree, current, out);
  return out;
}

}  // namespace hurwitz
