#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "hurwitz/error.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/realization.hpp"

using hurwitz::GeneratedGroup;
using hurwitz::Permutation;
using hurwitz::PointSet;

namespace {

Permutation perm(int d, const char* text) { return Permutation::parse(d, text); }

GeneratedGroup group(int d, std::initializer_list<const char*> gens) {
  std::vector<Permutation> out;
  for (const char* g : gens) out.push_back(perm(d, g));
  return GeneratedGroup(out);
}

GeneratedGroup canonical_group(int d) {
  auto [a, b] = hurwitz::canonical_involution_pair(d);
  return GeneratedGroup({a, b});
}

Permutation random_perm(int d, std::mt19937_64& rng) {
  auto images = brute::identity(d);
  std::shuffle(images.begin(), images.end(), rng);
  for (auto& x : images) ++x;
  return Permutation::from_images(images);
}

PointSet mask_to_set(std::uint32_t mask, int d) {
  PointSet out;
  for (int x = 0; x < d; ++x) {
    if (mask >> x & 1u) out.push_back(x + 1);
  }
  return out;
}

}  // namespace

TEST_CASE("orbits and transitivity") {
  CHECK(orbits(group(4, {"(1 2)(3 4)"})) == std::vector<PointSet>{{1, 2}, {3, 4}});
  CHECK(orbits(group(4, {"(1 2)(3 4)", "(2 3)(4 1)"})) == std::vector<PointSet>{{1, 2, 3, 4}});
  CHECK(orbits(group(3, {"()"})) == std::vector<PointSet>{{1}, {2}, {3}});
  CHECK(is_transitive(group(7, {"(1 2 3 4 5 6 7)"})));
  CHECK_FALSE(is_transitive(group(3, {"(1 2)"})));
  CHECK(is_transitive(canonical_group(6)));
  CHECK_THROWS_AS(GeneratedGroup({}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratedGroup({perm(3, "(1 2)"), perm(4, "(1 2)")}), std::invalid_argument);
}

TEST_CASE("minimal_block_containing") {
  CHECK(minimal_block_containing(canonical_group(6), 1, 3) == PointSet{1, 3, 5});
  CHECK(minimal_block_containing(group(4, {"(1 2 3 4)"}), 1, 3) == PointSet{1, 3});
  CHECK(minimal_block_containing(group(4, {"(1 2 3 4)"}), 1, 2) == PointSet{1, 2, 3, 4});
  const GeneratedGroup s5 = group(5, {"(1 2)", "(1 2 3 4 5)"});
  for (int y = 2; y <= 5; ++y) CHECK(minimal_block_containing(s5, 1, y).size() == 5);
  CHECK_THROWS_AS(minimal_block_containing(group(3, {"(1 2)"}), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(minimal_block_containing(s5, 2, 2), std::invalid_argument);
}

TEST_CASE("refinement matches brute-force blocks") {
  std::mt19937_64 rng(23);
  int tested = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int d = 2 + trial % 6;
    std::vector<Permutation> gens{random_perm(d, rng)};
    if (trial % 3 != 0) gens.push_back(random_perm(d, rng));
    const GeneratedGroup g(gens);
    if (!is_transitive(g)) continue;
    ++tested;
    const auto closure = brute::closure(brute::gens_of(gens), d);
    for (int y = 2; y <= d; ++y) {
      // Smallest brute-force block holding 1 and y.
      std::uint32_t best = (1u << d) - 1;
      for (std::uint32_t mask = 1; mask < (1u << d); mask += 2) {
        if (!(mask >> (y - 1) & 1u)) continue;
        if (__builtin_popcount(mask) < __builtin_popcount(best) && brute::is_block_mask(closure, mask, d)) best = mask;
      }
      const PointSet block = minimal_block_containing(g, 1, y);
      CHECK(block == mask_to_set(best, d));
      CHECK(is_block(g, block));
    }
    const auto prim = is_primitive(g);
    CHECK(prim.primitive == (brute::nontrivial_block(closure, d) == 0));
    if (!prim.primitive) {
      REQUIRE(prim.block.has_value());
      CHECK(prim.block->size() > 1);
      CHECK(static_cast<int>(prim.block->size()) < d);
      CHECK(is_block(g, *prim.block));
    }
    CHECK(hurwitz::elements(g).size() == closure.size());
  }
  CHECK(tested > 100);
}

TEST_CASE("is_primitive") {
  // Transitive groups containing a (d-1)-cycle.
  for (int d = 3; d <= 9; ++d) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int x = 1; x < d - 1; ++x) images[static_cast<std::size_t>(x - 1)] = x + 1;
    images[static_cast<std::size_t>(d - 2)] = 1;
    images[static_cast<std::size_t>(d - 1)] = d;
    const Permutation cycle = Permutation::from_images(images);
    const GeneratedGroup g({cycle, Permutation::from_cycles(d, std::vector<hurwitz::Cycle>{{1, d}})});
    CHECK(is_primitive(g).primitive);
  }
  for (int d = 4; d <= 12; d += 2) {
    const auto p = is_primitive(canonical_group(d));
    CHECK_FALSE(p.primitive);
    REQUIRE(p.block.has_value());
    CHECK(is_block(canonical_group(d), *p.block));
    PointSet odd;
    for (int x = 1; x < d; x += 2) odd.push_back(x);
    CHECK(is_block(canonical_group(d), odd));
  }
  CHECK(is_primitive(group(2, {"(1 2)"})).primitive);
  CHECK_THROWS_AS(is_primitive(group(3, {"(1 2)"})), std::invalid_argument);
  CHECK_THROWS_AS(is_primitive(group(1, {"()"})), std::invalid_argument);
}

TEST_CASE("is_block looks past the generators") {
  // (1 2 3 4 5 6) moves {1,3} off itself, but its square does not.
  const GeneratedGroup c6 = group(6, {"(1 2 3 4 5 6)"});
  CHECK_FALSE(is_block(c6, PointSet{1, 3}));
  CHECK(is_block(c6, PointSet{1, 3, 5}));
  CHECK(is_block(c6, PointSet{1, 4}));
  CHECK_FALSE(is_block(c6, PointSet{1, 2, 4}));
  CHECK(is_block(c6, PointSet{2}));
  CHECK_FALSE(is_block(c6, PointSet{}));
  CHECK_FALSE(is_block(c6, PointSet{1, 1}));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 2 + trial % 6;
    const std::vector<Permutation> gens{random_perm(d, rng), random_perm(d, rng)};
    const auto closure = brute::closure(brute::gens_of(gens), d);
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
      CHECK(is_block(GeneratedGroup(gens), mask_to_set(mask, d)) == brute::is_block_mask(closure, mask, d));
    }
  }
}

TEST_CASE("block_system_from") {
  const auto sys = block_system_from(canonical_group(6), PointSet{1, 3, 5});
  CHECK(sys.blocks() == std::vector<PointSet>{{1, 3, 5}, {2, 4, 6}});
  CHECK(sys.block_size() == 3);
  const auto g = canonical_group(6);
  CHECK(block_system_from(g, PointSet{4}).blocks().size() == 6);
  CHECK(block_system_from(g, PointSet{1, 2, 3, 4, 5, 6}).blocks().size() == 1);
  CHECK(block_system_from(g, PointSet{1, 2}).blocks() == std::vector<PointSet>{{1, 2}, {3, 6}, {4, 5}});
  CHECK_THROWS_AS(block_system_from(g, PointSet{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::BlockSystem(4, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz::BlockSystem(4, {{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("elements") {
  CHECK(hurwitz::elements(group(2, {"(1 2)"})).size() == 2);
  CHECK(hurwitz::elements(group(3, {"(1 2)", "(1 2 3)"})).size() == 6);
  CHECK(8 % hurwitz::elements(canonical_group(4)).size() == 0);
  CHECK(hurwitz::elements(canonical_group(10)).size() == 10);
  CHECK(hurwitz::elements(group(3, {"(1 2)"})).front().is_identity());
  CHECK_THROWS_AS(hurwitz::elements(group(8, {"(1 2)", "(1 2 3 4 5 6 7 8)"}), 1000), hurwitz::CapExceeded);
}

TEST_CASE("stabilizer_is_maximal agrees with primitivity") {
  CHECK(stabilizer_is_maximal(group(5, {"(1 2)", "(1 2 3 4 5)"}), 1));
  CHECK_FALSE(stabilizer_is_maximal(canonical_group(6), 1));
  CHECK(stabilizer_is_maximal(group(2, {"(1 2)"}), 1));
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 5;
    const GeneratedGroup g({random_perm(d, rng), random_perm(d, rng)});
    if (!is_transitive(g)) continue;
    CHECK(stabilizer_is_maximal(g, 1 + trial % d) == is_primitive(g).primitive);
  }
  CHECK_THROWS_AS(stabilizer_is_maximal(group(3, {"(1 2)"}), 1), std::invalid_argument);
}

TEST_CASE("conjugator") {
  const Permutation p = perm(5, "(1 4)(2 3 5)");
  auto lambda = hurwitz::conjugator(p, p);
  REQUIRE(lambda.has_value());
  CHECK(conjugate(p, *lambda) == p);
  lambda = hurwitz::conjugator(perm(3, "(1 2)"), perm(3, "(2 3)"));
  REQUIRE(lambda.has_value());
  CHECK(conjugate(perm(3, "(1 2)"), *lambda) == perm(3, "(2 3)"));
  CHECK_FALSE(hurwitz::conjugator(perm(3, "(1 2)"), perm(3, "(1 2 3)")).has_value());
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 9;
    const Permutation a = random_perm(d, rng);
    const Permutation b = conjugate(a, random_perm(d, rng));
    auto l = hurwitz::conjugator(a, b);
    REQUIRE(l.has_value());
    CHECK(conjugate(a, *l) == b);
  }
}
