#include "hurwitz/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }
  // The smaller representative survives.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<PointSet> classes_of(UnionFind& uf, int degree) {
  std::vector<PointSet> by_root(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x) by_root[static_cast<std::size_t>(uf.find(x))].push_back(x + 1);
  std::vector<PointSet> out;
  for (auto& cls : by_root) {
    if (!cls.empty()) out.push_back(std::move(cls));
  }
  return out;
}

void require_transitive(const GeneratedGroup& group) {
  if (!is_transitive(group)) throw std::invalid_argument("group is not transitive");
}

std::vector<Permutation> closure(std::span<const Permutation> gens, int degree, std::size_t cap) {
  std::vector<Permutation> out{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Permutation& g : gens) {
      Permutation next = compose(out[i], g);
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw CapExceeded("group has more than " + std::to_string(cap) + " elements");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace

GeneratedGroup::GeneratedGroup(std::vector<Permutation> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("a generated group needs at least one generator");
  degree_ = generators_.front().degree();
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generators of mixed degree");
  }
}

BlockSystem::BlockSystem(int degree, std::vector<PointSet> blocks) : degree_(degree), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("empty block system");
  std::vector<bool> covered(static_cast<std::size_t>(degree), false);
  const std::size_t size = blocks_.front().size();
  for (PointSet& block : blocks_) {
    if (block.size() != size) throw std::invalid_argument("blocks of unequal size");
    std::sort(block.begin(), block.end());
    for (Point x : block) {
      if (x < 1 || x > degree || covered[static_cast<std::size_t>(x - 1)]) {
        throw std::invalid_argument("blocks do not partition the point set");
      }
      covered[static_cast<std::size_t>(x - 1)] = true;
    }
  }
  if (size * blocks_.size() != static_cast<std::size_t>(degree)) {
    throw std::invalid_argument("blocks do not cover the point set");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

std::vector<PointSet> orbits(const GeneratedGroup& group) {
  UnionFind uf(group.degree());
  for (const Permutation& g : group.generators()) {
    const auto img = g.zero_based();
    for (int x = 0; x < group.degree(); ++x) uf.unite(x, img[static_cast<std::size_t>(x)]);
  }
  return classes_of(uf, group.degree());
}

bool is_transitive(const GeneratedGroup& group) { return orbits(group).size() == 1; }

PointSet minimal_block_containing(const GeneratedGroup& group, Point x, Point y) {
  const int d = group.degree();
  if (x < 1 || x > d || y < 1 || y > d) throw std::invalid_argument("seed point out of range");
  if (x == y) throw std::invalid_argument("seed points must differ");
  require_transitive(group);

  UnionFind uf(d);
  std::deque<std::pair<int, int>> pending;
  uf.unite(x - 1, y - 1);
  pending.emplace_back(x - 1, y - 1);
  while (!pending.empty()) {
    const auto [a, b] = pending.front();
    pending.pop_front();
    for (const Permutation& g : group.generators()) {
      const auto img = g.zero_based();
      const int ra = uf.find(img[static_cast<std::size_t>(a)]);
      const int rb = uf.find(img[static_cast<std::size_t>(b)]);
      if (uf.unite(ra, rb)) pending.emplace_back(ra, rb);
    }
  }
  PointSet block;
  const int root = uf.find(x - 1);
  for (int z = 0; z < d; ++z) {
    if (uf.find(z) == root) block.push_back(z + 1);
  }
  return block;
}

Primitivity is_primitive(const GeneratedGroup& group) {
  const int d = group.degree();
  if (d < 2) throw std::invalid_argument("primitivity needs at least two points");
  require_transitive(group);
  for (Point y = 2; y <= d; ++y) {
    PointSet block = minimal_block_containing(group, 1, y);
    if (static_cast<int>(block.size()) < d) return {false, std::move(block)};
  }
  return {true, std::nullopt};
}

bool is_block(const GeneratedGroup& group, std::span<const Point> candidate) {
  const int d = group.degree();
  if (candidate.empty()) return false;
  std::vector<bool> member(static_cast<std::size_t>(d), false);
  for (Point x : candidate) {
    if (x < 1 || x > d || member[static_cast<std::size_t>(x - 1)]) return false;
    member[static_cast<std::size_t>(x - 1)] = true;
  }
  // Every image g(B) lies in the orbit of B under the generators, so walk
  // that orbit and require each translate to equal B or miss it. A block
  // has at most d / |B| translates, so the walk stops early otherwise.
  PointSet start(candidate.begin(), candidate.end());
  std::sort(start.begin(), start.end());
  std::set<PointSet> seen{start};
  std::vector<PointSet> frontier{start};
  while (!frontier.empty()) {
    const PointSet current = std::move(frontier.back());
    frontier.pop_back();
    for (const Permutation& g : group.generators()) {
      PointSet image;
      std::size_t inside = 0;
      for (Point x : current) {
        image.push_back(g(x));
        if (member[static_cast<std::size_t>(g(x) - 1)]) ++inside;
      }
      if (inside != 0 && inside != image.size()) return false;
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) frontier.push_back(std::move(image));
    }
  }
  return true;
}

BlockSystem block_system_from(const GeneratedGroup& group, std::span<const Point> block) {
  if (!is_block(group, block)) throw std::invalid_argument("not a block of the group");
  std::vector<PointSet> system{PointSet(block.begin(), block.end())};
  std::sort(system.front().begin(), system.front().end());
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (const Permutation& g : group.generators()) {
      PointSet image;
      for (Point x : system[i]) image.push_back(g(x));
      std::sort(image.begin(), image.end());
      if (std::find(system.begin(), system.end(), image) == system.end()) system.push_back(std::move(image));
    }
  }
  // Intransitive groups can leave points uncovered; the constructor rejects that.
  return BlockSystem(group.degree(), std::move(system));
}

std::vector<Permutation> elements(const GeneratedGroup& group, std::size_t cap) {
  return closure(group.generators(), group.degree(), cap);
}

bool stabilizer_is_maximal(const GeneratedGroup& group, Point x, std::size_t cap) {
  require_transitive(group);
  const std::vector<Permutation> all = elements(group, cap);
  std::vector<Permutation> stabilizer;
  for (const Permutation& g : all) {
    if (g(x) == x) stabilizer.push_back(g);
  }
  // A small generating set for the stabilizer.
  std::vector<Permutation> stab_gens;
  std::unordered_set<Permutation, PermutationHash> generated{Permutation::identity(group.degree())};
  for (const Permutation& h : stabilizer) {
    if (generated.contains(h)) continue;
    stab_gens.push_back(h);
    const auto sub = closure(stab_gens, group.degree(), cap);
    generated = std::unordered_set<Permutation, PermutationHash>(sub.begin(), sub.end());
  }
  for (const Permutation& g : all) {
    if (g(x) == x) continue;
    std::vector<Permutation> gens = stab_gens;
    gens.push_back(g);
    if (closure(gens, group.degree(), cap).size() != all.size()) return false;
  }
  return true;
}

std::optional<Permutation> conjugator(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  auto by_length = [](std::vector<Cycle> cycles) {
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const Cycle& a, const Cycle& b) { return a.size() > b.size(); });
    return cycles;
  };
  const auto cp = by_length(cycle_decomposition(p));
  const auto cq = by_length(cycle_decomposition(q));
  if (cp.size() != cq.size()) return std::nullopt;
  // q = lambda p lambda^-1  <=>  (x^q)^lambda = (x^lambda)^p, so lambda carries
  // each cycle of q onto a cycle of p of the same length.
  std::vector<Point> images(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (cp[i].size() != cq[i].size()) return std::nullopt;
    for (std::size_t j = 0; j < cp[i].size(); ++j) images[static_cast<std::size_t>(cq[i][j] - 1)] = cp[i][j];
  }
  return Permutation::from_images(images);
}

}  // namespace hurwitz
