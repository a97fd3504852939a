#include "hurwitz/classes.hpp"

#include <map>
#include <stdexcept>

#include "hurwitz/error.hpp"

namespace hurwitz {

Permutation canonical_element(const Partition& cycle_type) {
  std::vector<Cycle> cycles;
  Point next = 1;
  for (int part : cycle_type.parts()) {
    Cycle c;
    for (int i = 0; i < part; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(cycle_type.degree(), cycles);
}

std::size_t class_size(const Partition& cycle_type) {
  // d! / prod(len^m_len * m_len!)
  long double size = 1;
  for (int i = 2; i <= cycle_type.degree(); ++i) size *= i;
  std::map<int, int> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  for (const auto& [len, m] : multiplicity) {
    for (int i = 0; i < m; ++i) size /= len;
    for (int i = 2; i <= m; ++i) size /= i;
  }
  return static_cast<std::size_t>(size + 0.5L);
}

namespace {

class ClassEnumerator {
 public:
  ClassEnumerator(const Partition& type, std::size_t cap)
      : degree_(type.degree()),
        cap_(cap),
        remaining_(static_cast<std::size_t>(type.degree()) + 1, 0),
        images_(static_cast<std::size_t>(type.degree()), 0),
        used_(static_cast<std::size_t>(type.degree()), false) {
    for (int part : type.parts()) ++remaining_[static_cast<std::size_t>(part)];
  }

  std::vector<Permutation> run() {
    open_cycle();
    return std::move(out_);
  }

 private:
  void open_cycle() {
    int start = 0;
    while (start < degree_ && used_[static_cast<std::size_t>(start)]) ++start;
    if (start == degree_) {
      if (out_.size() >= cap_) throw CapExceeded("conjugacy class larger than " + std::to_string(cap_));
      out_.push_back(Permutation::from_images(images_));
      return;
    }
    for (int len = degree_; len >= 1; --len) {
      if (remaining_[static_cast<std::size_t>(len)] == 0) continue;
      --remaining_[static_cast<std::size_t>(len)];
      used_[static_cast<std::size_t>(start)] = true;
      extend(start, start, len - 1);
      used_[static_cast<std::size_t>(start)] = false;
      ++remaining_[static_cast<std::size_t>(len)];
    }
  }

  void extend(int start, int last, int left) {
    if (left == 0) {
      images_[static_cast<std::size_t>(last)] = start + 1;
      open_cycle();
      return;
    }
    for (int z = 0; z < degree_; ++z) {
      if (used_[static_cast<std::size_t>(z)]) continue;
      used_[static_cast<std::size_t>(z)] = true;
      images_[static_cast<std::size_t>(last)] = z + 1;
      extend(start, z, left - 1);
      used_[static_cast<std::size_t>(z)] = false;
    }
  }

  int degree_;
  std::size_t cap_;
  std::vector<int> remaining_;
  std::vector<Point> images_;
  std::vector<bool> used_;
  std::vector<Permutation> out_;
};

}  // namespace

std::vector<Permutation> class_elements(const Partition& cycle_type, std::size_t cap) {
  return ClassEnumerator(cycle_type, cap).run();
}

}  // namespace hurwitz
