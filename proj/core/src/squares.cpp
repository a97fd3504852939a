#include "hurwitz/squares.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

// beta maps a_i -> b_{(shift+i) mod m} and b_{shift+i} -> a_{i+1}.
void interleave(const Cycle& a, const Cycle& b, std::size_t shift, std::vector<int>& images) {
  const std::size_t m = a.size();
  for (std::size_t i = 0; i < m; ++i) {
    images[static_cast<std::size_t>(a[i] - 1)] = b[(shift + i) % m];
    images[static_cast<std::size_t>(b[(shift + i) % m] - 1)] = a[(i + 1) % m];
  }
}

void root_odd_cycle(const Cycle& c, std::vector<int>& images) {
  const std::size_t r = c.size();
  const std::size_t half = (r + 1) / 2;
  for (std::size_t i = 0; i < r; ++i) images[static_cast<std::size_t>(c[i] - 1)] = c[(i + half) % r];
}

}  // namespace

bool is_square(const Partition& cycle_type) {
  for (int len = 2; len <= cycle_type.degree(); len += 2) {
    if (cycle_type.count(len) % 2 != 0) return false;
  }
  return true;
}

bool is_square(const Permutation& p) { return is_square(cycle_type(p)); }

Permutation sqrt_odd_cycle(const Cycle& cycle, int degree) {
  if (cycle.empty() || cycle.size() % 2 == 0) throw std::invalid_argument("cycle length must be odd");
  std::vector<int> images = Permutation::identity(degree).images();
  for (Point x : cycle) {
    if (x < 1 || x > degree) throw std::invalid_argument("point out of range");
  }
  root_odd_cycle(cycle, images);
  return Permutation::from_images(images);
}

std::optional<Permutation> sqrt(const Permutation& p) {
  if (!is_square(p)) return std::nullopt;
  std::vector<int> images = p.images();
  std::map<std::size_t, std::vector<const Cycle*>> even_by_length;
  const auto cycles = cycle_decomposition(p);
  for (const Cycle& c : cycles) {
    if (c.size() % 2 == 1) {
      root_odd_cycle(c, images);
    } else {
      even_by_length[c.size()].push_back(&c);
    }
  }
  for (const auto& [length, group] : even_by_length) {
    for (std::size_t i = 0; i + 1 < group.size(); i += 2) interleave(*group[i], *group[i + 1], 0, images);
  }
  return Permutation::from_images(images);
}

std::vector<Permutation> all_square_roots(const Permutation& p, std::size_t cap) {
  std::vector<Permutation> roots;
  if (!is_square(p)) return roots;

  // Roots are assembled length by length: every m-cycle of p is either rooted
  // alone (m odd only) or paired with another m-cycle into a 2m-cycle, in m ways.
  std::map<std::size_t, std::vector<Cycle>> by_length;
  for (Cycle& c : cycle_decomposition(p)) {
    const std::size_t len = c.size();
    by_length[len].push_back(std::move(c));
  }
  std::vector<const std::vector<Cycle>*> groups;
  for (const auto& [len, cs] : by_length) groups.push_back(&cs);

  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  std::vector<bool> placed;

  std::function<void(std::size_t)> next_group;
  std::function<void(std::size_t, std::size_t)> next_cycle = [&](std::size_t g, std::size_t i) {
    const auto& cs = *groups[g];
    while (i < cs.size() && placed[i]) ++i;
    if (i == cs.size()) {
      next_group(g + 1);
      return;
    }
    placed[i] = true;
    const std::size_t m = cs[i].size();
    if (m % 2 == 1) {
      root_odd_cycle(cs[i], images);
      next_cycle(g, i + 1);
    }
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (placed[j]) continue;
      placed[j] = true;
      for (std::size_t shift = 0; shift < m; ++shift) {
        interleave(cs[i], cs[j], shift, images);
        next_cycle(g, i + 1);
      }
      placed[j] = false;
    }
    placed[i] = false;
  };
  next_group = [&](std::size_t g) {
    if (g == groups.size()) {
      if (roots.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " square roots");
      roots.push_back(Permutation::from_images(images));
      return;
    }
    // The placement flags are per group; save the caller's.
    std::vector<bool> saved = std::move(placed);
    placed.assign(groups[g]->size(), false);
    next_cycle(g, 0);
    placed = std::move(saved);
  };
  next_group(0);
  return roots;
}

}  // namespace hurwitz
