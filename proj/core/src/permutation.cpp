#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
}

}  // namespace

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("invalid degree " + std::to_string(degree));
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const int d = static_cast<int>(images.size());
  if (d < 1) throw std::invalid_argument("invalid degree 0");
  std::vector<int> img(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point y = images[i];
    if (y < 1 || y > d) throw std::invalid_argument("image out of range: " + std::to_string(y));
    if (seen[static_cast<std::size_t>(y - 1)]) throw std::invalid_argument("not a bijection: " + std::to_string(y) + " repeated");
    seen[static_cast<std::size_t>(y - 1)] = true;
    img[i] = y - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, std::span<const Cycle> cycles) {
  Permutation result = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const Cycle& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (Point x : cycle) {
      if (x < 1 || x > degree) throw std::invalid_argument("point out of range: " + std::to_string(x));
      if (used[static_cast<std::size_t>(x - 1)]) throw std::invalid_argument("repeated point: " + std::to_string(x));
      used[static_cast<std::size_t>(x - 1)] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      const Point to = cycle[(i + 1) % cycle.size()];
      result.images_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
  }
  return result;
}

Permutation Permutation::parse(int degree, std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation", i);
    ++i;
    Cycle cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a point", i);
      const std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("point too large", start);
        ++i;
      }
      if (value < 1 || value > degree) throw ParseError("point out of range: " + std::to_string(value), start);
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const Cycle& cycle : cycle_decomposition(*this)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<int> img(p.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
  return Permutation(std::move(img));
}

Permutation compose_all(std::span<const Permutation> factors) {
  if (factors.empty()) throw std::invalid_argument("empty product has no degree");
  Permutation result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) result = compose(result, factors[i]);
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& lambda) {
  require_same_degree(p, lambda);
  // x -> ((x^lambda)^p)^(lambda^-1)
  const Permutation lambda_inv = lambda.inverse();
  std::vector<int> img(p.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    const auto a = static_cast<std::size_t>(lambda.images_[i]);
    const auto b = static_cast<std::size_t>(p.images_[a]);
    img[i] = lambda_inv.images_[b];
  }
  return Permutation(std::move(img));
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const auto img = p.zero_based();
  std::vector<bool> seen(img.size(), false);
  std::vector<Cycle> cycles;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(img[x])) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x + 1));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const Cycle& c : cycle_decomposition(p)) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

int defect(const Permutation& p) {
  return p.degree() - static_cast<int>(cycle_decomposition(p).size());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.zero_based()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hurwitz
