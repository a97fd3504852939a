#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "hurwitz/classes.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/realization.hpp"

using namespace hurwitz;

namespace {

Permutation perm(int d, const char* text) { return Permutation::parse(d, text); }
BranchData bd(const char* text) { return parse_branch_data(text); }

Permutation random_perm(int d, std::mt19937_64& rng) {
  auto images = brute::identity(d);
  std::shuffle(images.begin(), images.end(), rng);
  for (auto& x : images) ++x;
  return Permutation::from_images(images);
}

Classification tags(Verdict v, RealizableCase c = RealizableCase::None,
                    DecomposableReason r = DecomposableReason::None) {
  Classification out;
  out.verdict = v;
  out.realizable_case = c;
  out.reason = r;
  return out;
}

// Independent check of a witness on raw image vectors.
void check_witness_brute(const BranchData& data, const HurwitzWitness& w) {
  const int d = data.degree();
  REQUIRE(w.gammas.size() == data.rows().size());
  brute::P product = brute::identity(d);
  for (const auto& g : w.gammas) product = brute::mul(product, brute::of(g));
  const brute::P a_inv = brute::inv(brute::of(w.alpha));
  CHECK(product == brute::mul(a_inv, a_inv));
  std::vector<int> seen(data.rows().size(), 0);
  for (std::size_t i = 0; i < w.gammas.size(); ++i) {
    const auto row = static_cast<std::size_t>(w.row_order[i]);
    ++seen[row];
    const auto parts = data.rows()[row].parts();
    CHECK(brute::lengths(brute::of(w.gammas[i])) == std::vector<int>(parts.begin(), parts.end()));
  }
  for (int count : seen) CHECK(count == 1);
  std::vector<brute::P> gens{brute::of(w.alpha)};
  for (const auto& g : w.gammas) gens.push_back(brute::of(g));
  CHECK(brute::transitive(gens, d));
  if (d <= 8) CHECK(brute::primitive(gens, d));
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify(bd("d=2; [2],[2]")) == tags(Verdict::IndecomposableRealizable, RealizableCase::DegreeTwo));
  CHECK(classify(bd("d=4; [2,2],[2,2],[2,2]")) ==
        tags(Verdict::OnlyDecomposable, RealizableCase::None, DecomposableReason::DegreeFourAllTwos));
  CHECK(classify(bd("d=6; [2,2,2],[2,2,2],[2,2,2],[2,2,2]")) ==
        tags(Verdict::IndecomposableRealizable, RealizableCase::BigDegreeManyRows));
  CHECK(classify(bd("d=6; [2,2,2],[2,2,2]")) ==
        tags(Verdict::OnlyDecomposable, RealizableCase::None, DecomposableReason::TwoAllTwosRows));
  CHECK(classify(bd("d=6; [3,2,1],[2,2,2]")) ==
        tags(Verdict::IndecomposableRealizable, RealizableCase::SomeRowNotAllTwos));
  CHECK(classify(bd("d=4; [2,2]")) == tags(Verdict::NotAdmissible));
  CHECK(classify(bd("d=5; [5],[5]")) == tags(Verdict::UnknownOddDegree));
  CHECK(classify(bd("d=5; [3,1,1]")) == tags(Verdict::NotAdmissible));
  CHECK(classify(bd("d=2; [2],[2]")).to_string() == "IndecomposableRealizable(DegreeTwo)");
  CHECK(classify(bd("d=6; [2,2,2],[2,2,2]")).to_string() == "OnlyDecomposable(TwoAllTwosRows)");
  CHECK(classify(bd("d=4; [2,2]")).to_string() == "NotAdmissible");
}

TEST_CASE("classify partitions even admissible data by row shape") {
  for (int d = 2; d <= 10; d += 2) {
    for (int s = 1; s <= 6; ++s) {
      const BranchData twos(d, std::vector<Partition>(static_cast<std::size_t>(s), Partition::all_twos(d)));
      const Classification c = classify(twos);
      if (!is_admissible(twos).admissible) {
        CHECK(c.verdict == Verdict::NotAdmissible);
      } else if (d == 2) {
        CHECK(c.realizable_case == RealizableCase::DegreeTwo);
      } else if (d > 4 && s > 2) {
        CHECK(c.realizable_case == RealizableCase::BigDegreeManyRows);
      } else {
        CHECK(c.verdict == Verdict::OnlyDecomposable);
      }
    }
  }
}

TEST_CASE("canonical_involution_pair") {
  auto [a, b] = canonical_involution_pair(4);
  CHECK(a == perm(4, "(1 2)(3 4)"));
  CHECK(b == perm(4, "(2 3)(4 1)"));
  CHECK(compose(a, b) == perm(4, "(1 3)(2 4)"));
  auto [c, e] = canonical_involution_pair(6);
  // 1 -> 2 -> 3, 3 -> 4 -> 5, 5 -> 6 -> 1; 2 -> 1 -> 6, 6 -> 5 -> 4, 4 -> 3 -> 2.
  CHECK(compose(c, e) == perm(6, "(1 3 5)(2 6 4)"));
  for (int d = 4; d <= 14; d += 2) {
    auto [p, q] = canonical_involution_pair(d);
    CHECK(cycle_type(p) == Partition::all_twos(d));
    CHECK(cycle_type(q) == Partition::all_twos(d));
    CHECK(cycle_type(compose(p, q)) == Partition({d / 2, d / 2}));
    for (int x = 1; x <= d; ++x) CHECK(compose(p, q)(x) % 2 == x % 2);
    PointSet odd, even;
    for (int x = 1; x <= d; ++x) (x % 2 ? odd : even).push_back(x);
    const auto sys = block_system_from(GeneratedGroup({p, q}), odd);
    CHECK(sys.blocks() == std::vector<PointSet>{odd, even});
  }
  CHECK_THROWS_AS(canonical_involution_pair(2), std::invalid_argument);
  CHECK_THROWS_AS(canonical_involution_pair(5), std::invalid_argument);
}

TEST_CASE("assemble_pair") {
  const Partition twos = Partition::all_twos(6);
  auto goal = PairGoal::transitive_with_defect(6, 1);
  goal.product_type = Partition({3, 3});
  auto [p, q] = canonical_involution_pair(6);
  CHECK(meets_goal(p, q, goal));
  auto [a, b] = assemble_pair(twos, twos, goal);
  CHECK(a == canonical_element(twos));
  CHECK(cycle_type(b) == twos);
  CHECK(meets_goal(a, b, goal));

  auto [c, e] = assemble_pair(Partition({6}), Partition({2, 1, 1, 1, 1}), PairGoal::transitive_near_full_cycle(6));
  CHECK(cycle_type(compose(c, e)) == Partition({5, 1}));
  CHECK(is_transitive(GeneratedGroup({c, e})));

  auto [f, g] = assemble_pair(Partition({3, 1}), Partition({3, 1}), PairGoal::orbit_count(4, 2));
  CHECK(orbits(GeneratedGroup({f, g})).size() == 2);
  CHECK(defect(compose(f, g)) == 2);

  // Two [2,2] involutions with two orbits agree on each orbit, so their
  // product is trivial: orbit count 2 with defect 2 is out of reach.
  const brute::P a22 = brute::of(canonical_element(Partition({2, 2})));
  for (const auto& b22 : brute::all_perms(4)) {
    if (brute::lengths(b22) != std::vector<int>{2, 2}) continue;
    if (brute::transitive({a22, b22}, 4)) continue;
    CHECK(brute::lengths(brute::mul(a22, b22)) == std::vector<int>{1, 1, 1, 1});
  }
  CHECK_THROWS_AS(assemble_pair(Partition({2, 2}), Partition({2, 2}), PairGoal::orbit_count(4, 2)), SearchExhausted);

  // Two fixed-point-free involutions generating a transitive group multiply
  // to two equal cycles, so defect 4 at degree 14 is out of reach.
  CHECK_THROWS_AS(assemble_pair(Partition::all_twos(14), Partition::all_twos(14), PairGoal::transitive_with_defect(14, 9)),
                  SearchExhausted);
  // Parity: transpositions multiply to an even permutation.
  CHECK_THROWS_AS(assemble_pair(Partition({2, 1, 1}), Partition({2, 1, 1}), PairGoal::product_defect_only(1)),
                  SearchExhausted);
}

TEST_CASE("assemble_pair meets random reachable goals") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 3 + trial % 6;
    const auto types = partitions_of(d);
    const Partition ta = types[rng() % types.size()], tb = types[rng() % types.size()];
    // Pick a goal that some random pair of these types actually meets.
    const Permutation a0 = canonical_element(ta);
    const Permutation b0 = conjugate(canonical_element(tb), random_perm(d, rng));
    PairGoal goal = PairGoal::product_defect_only(defect(compose(a0, b0)));
    goal.orbits = static_cast<int>(orbits(GeneratedGroup({a0, b0})).size());
    auto [a, b] = assemble_pair(ta, tb, goal);
    CHECK(a == a0);
    CHECK(cycle_type(b) == tb);
    CHECK(meets_goal(a, b, goal));
  }
}

TEST_CASE("realize_indecomposable examples") {
  auto r = realize_indecomposable(bd("d=2; [2],[2]"));
  CHECK(r.witness.gammas == std::vector<Permutation>{perm(2, "(1 2)"), perm(2, "(1 2)")});
  CHECK(r.witness.alpha.is_identity());
  CHECK(r.certificate.all_ok());
  CHECK(r.path == EnginePath::ProofGuided);

  for (const char* text : {"d=6; [2,2,2],[2,2,2],[2,2,2],[2,2,2]", "d=8; [4,4],[2,2,2,2],[2,2,2,2]",
                           "d=6; [3,2,1],[2,2,2]", "d=6; [5,1],[2,2,1,1],[2,2,1,1]",
                           "d=14; [2,2,2,2,2,2,2],[2,2,2,2,2,2,2],[2,2,2,2,2,2,2],[4,1,1,1,1,1,1,1,1,1,1]",
                           "d=12; [2,2,2,2,2,2],[2,2,2,2,2,2],[2,2,2,2,2,2]"}) {
    CAPTURE(text);
    const BranchData data = bd(text);
    const Realization real = realize_indecomposable(data);
    CHECK(real.certificate.all_ok());
    CHECK(verify_witness(data, real.witness) == real.certificate);
    CHECK_FALSE(real.certificate.witness_block.has_value());
    CHECK(real.certificate.euler_char == euler_char_covering(data));
    check_witness_brute(data, real.witness);
  }
  CHECK_THROWS_AS(realize_indecomposable(bd("d=4; [2,2],[2,2]")), std::invalid_argument);
  CHECK_THROWS_AS(realize_indecomposable(bd("d=6; [5,1],[2,2,2]")), std::invalid_argument);
  CHECK_THROWS_AS(realize_indecomposable(bd("d=5; [5],[5]")), std::invalid_argument);
}

TEST_CASE("realize_indecomposable is deterministic per seed") {
  const BranchData data = bd("d=10; [3,3,2,2],[2,2,2,2,2],[5,5],[2,1,1,1,1,1,1,1,1]");
  SearchOptions opts;
  opts.seed = 99;
  const auto a = realize_indecomposable(data, opts), b = realize_indecomposable(data, opts);
  CHECK(a.witness.alpha == b.witness.alpha);
  CHECK(a.witness.gammas == b.witness.gammas);
  CHECK(a.witness.row_order == b.witness.row_order);
  CHECK(a.seed == 99);
}

TEST_CASE("row order is recorded both ways") {
  const BranchData data = bd("d=6; [2,2,2],[2,2,2],[4,2]");
  const auto r = realize_indecomposable(data);
  const auto& order = r.witness.row_order;
  const auto& applied = r.certificate.row_permutation_applied;
  REQUIRE(order.size() == 3);
  REQUIRE(applied.size() == 3);
  for (int pos = 0; pos < 3; ++pos) CHECK(applied[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] == pos);
  check_witness_brute(data, r.witness);
}

TEST_CASE("verify_witness") {
  // The canonical pair at degree 4 with alpha = (1 2 3 4): transitive,
  // relation holds, imprimitive.
  const BranchData data = bd("d=4; [2,2],[2,2]");
  HurwitzWitness w;
  w.degree = 4;
  w.alpha = perm(4, "(1 2 3 4)");
  w.gammas = {perm(4, "(1 2)(3 4)"), perm(4, "(2 3)(4 1)")};
  w.row_order = {0, 1};
  Certificate c = verify_witness(data, w);
  CHECK(c.relation_ok);
  CHECK(c.row_types_ok);
  CHECK(c.transitive);
  CHECK_FALSE(c.primitive);
  REQUIRE(c.witness_block.has_value());
  CHECK(c.witness_block->size() == 2);
  CHECK(is_block(GeneratedGroup({w.alpha, w.gammas[0], w.gammas[1]}), *c.witness_block));
  CHECK(c.euler_char == 0);
  CHECK_FALSE(c.all_ok());

  HurwitzWitness bad = w;
  bad.gammas[1] = perm(4, "(1 2)");
  c = verify_witness(data, bad);
  CHECK_FALSE(c.row_types_ok);
  CHECK_FALSE(c.relation_ok);

  bad = w;
  bad.alpha = perm(4, "(1 2)");
  CHECK_FALSE(verify_witness(data, bad).relation_ok);

  bad = w;
  bad.gammas.pop_back();
  CHECK_FALSE(verify_witness(data, bad).all_ok());
  bad = w;
  bad.row_order = {0, 0};
  CHECK_FALSE(verify_witness(data, bad).row_types_ok);
  bad = w;
  bad.degree = 5;
  CHECK_NOTHROW(verify_witness(data, bad));
  CHECK_FALSE(verify_witness(data, bad).all_ok());
}

TEST_CASE("realize_decomposable_search") {
  for (const char* text : {"d=4; [2,2],[2,2],[2,2]", "d=6; [2,2,2],[2,2,2]", "d=4; [2,2],[2,2]"}) {
    CAPTURE(text);
    const BranchData data = bd(text);
    const auto r = realize_decomposable_search(data);
    REQUIRE(r.has_value());
    CHECK(r->path == EnginePath::DecomposableSearch);
    CHECK(r->certificate.relation_ok);
    CHECK(r->certificate.row_types_ok);
    CHECK(r->certificate.transitive);
    CHECK_FALSE(r->certificate.primitive);
    REQUIRE(r->certificate.witness_block.has_value());
  }
  CHECK_FALSE(realize_decomposable_search(bd("d=2; [2],[2]")).has_value());
  CHECK_FALSE(realize_decomposable_search(bd("d=4; [2,2]")).has_value());
  CHECK_FALSE(realize_decomposable_search(bd("d=5; [5],[5]")).has_value());
}

TEST_CASE("realization over a sweep of small data") {
  // Every classify-approved datum with d <= 8 and up to three rows drawn from
  // a fixed menu of shapes.
  int realized = 0;
  for (int d = 2; d <= 8; d += 2) {
    const auto types = partitions_of(d);
    std::vector<Partition> menu;
    for (const auto& t : types) {
      if (!t.is_trivial()) menu.push_back(t);
    }
    for (std::size_t i = 0; i < menu.size(); ++i) {
      for (std::size_t j = i; j < menu.size(); ++j) {
        for (std::size_t k = j; k <= menu.size(); ++k) {
          std::vector<Partition> rows{menu[i], menu[j]};
          if (k < menu.size()) rows.push_back(menu[k]);
          const BranchData data(d, rows);
          if (classify(data).verdict != Verdict::IndecomposableRealizable) continue;
          const auto r = realize_indecomposable(data);
          CHECK_MESSAGE(r.certificate.all_ok(), data.to_string());
          ++realized;
        }
      }
    }
  }
  CHECK(realized > 300);
}
