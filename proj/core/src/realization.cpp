#include "hurwitz/realization.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hurwitz/classes.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/squares.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// Classification

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotAdmissible: return "NotAdmissible";
    case Verdict::IndecomposableRealizable: return "IndecomposableRealizable";
    case Verdict::OnlyDecomposable: return "OnlyDecomposable";
    case Verdict::UnknownOddDegree: return "UnknownOddDegree";
  }
  return "?";
}

std::string to_string(RealizableCase c) {
  switch (c) {
    case RealizableCase::None: return "None";
    case RealizableCase::DegreeTwo: return "DegreeTwo";
    case RealizableCase::SomeRowNotAllTwos: return "SomeRowNotAllTwos";
    case RealizableCase::BigDegreeManyRows: return "BigDegreeManyRows";
    case RealizableCase::ExhaustiveSearch: return "ExhaustiveSearch";
  }
  return "?";
}

std::string to_string(DecomposableReason r) {
  switch (r) {
    case DecomposableReason::None: return "None";
    case DecomposableReason::TwoAllTwosRows: return "TwoAllTwosRows";
    case DecomposableReason::DegreeFourAllTwos: return "DegreeFourAllTwos";
    case DecomposableReason::ExhaustiveSearch: return "ExhaustiveSearch";
  }
  return "?";
}

std::string Classification::to_string() const {
  switch (verdict) {
    case Verdict::IndecomposableRealizable: return hurwitz::to_string(verdict) + "(" + hurwitz::to_string(realizable_case) + ")";
    case Verdict::OnlyDecomposable: return hurwitz::to_string(verdict) + "(" + hurwitz::to_string(reason) + ")";
    default: return hurwitz::to_string(verdict);
  }
}

Classification classify(const BranchData& data) {
  Classification out;
  const Admissibility adm = is_admissible(data);
  if (!adm.admissible) {
    out.verdict = Verdict::NotAdmissible;
    out.detail = adm.reason;
    return out;
  }
  const int d = data.degree();
  const int s = data.row_count();
  if (d % 2 != 0) {
    out.verdict = Verdict::UnknownOddDegree;
    out.detail = "odd degree";
    return out;
  }
  const bool all_twos =
      std::all_of(data.rows().begin(), data.rows().end(), [](const Partition& row) { return row.is_all_twos(); });
  if (d == 2) {
    out.verdict = Verdict::IndecomposableRealizable;
    out.realizable_case = RealizableCase::DegreeTwo;
    out.detail = "degree 2";
  } else if (!all_twos) {
    out.verdict = Verdict::IndecomposableRealizable;
    out.realizable_case = RealizableCase::SomeRowNotAllTwos;
    out.detail = "some row differs from [2,...,2]";
  } else if (d > 4 && s > 2) {
    out.verdict = Verdict::IndecomposableRealizable;
    out.realizable_case = RealizableCase::BigDegreeManyRows;
    out.detail = "d > 4 and s > 2";
  } else if (d == 4) {
    out.verdict = Verdict::OnlyDecomposable;
    out.reason = DecomposableReason::DegreeFourAllTwos;
    out.detail = "degree 4 with every row [2,2]";
  } else {
    out.verdict = Verdict::OnlyDecomposable;
    out.reason = DecomposableReason::TwoAllTwosRows;
    out.detail = "two rows [2,...,2]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pair goals

std::pair<Permutation, Permutation> canonical_involution_pair(int d) {
  if (d < 4 || d % 2 != 0) throw std::invalid_argument("canonical involution pair needs even d >= 4");
  std::vector<Cycle> first;
  std::vector<Cycle> second;
  for (Point x = 1; x < d; x += 2) first.push_back({x, x + 1});
  for (Point x = 2; x < d; x += 2) second.push_back({x, x + 1});
  second.push_back({d, 1});
  return {Permutation::from_cycles(d, first), Permutation::from_cycles(d, second)};
}

PairGoal PairGoal::orbit_count(int degree, int t) {
  PairGoal g;
  g.orbits = t;
  g.product_defect = degree - t;
  return g;
}

PairGoal PairGoal::transitive_with_defect(int degree, int k) {
  PairGoal g;
  g.orbits = 1;
  g.product_defect = (degree - 1) - k;
  return g;
}

PairGoal PairGoal::transitive_near_full_cycle(int degree) {
  PairGoal g;
  g.orbits = 1;
  g.product_type = degree == 1 ? Partition({1}) : Partition({degree - 1, 1});
  g.product_defect = g.product_type->nu();
  return g;
}

PairGoal PairGoal::product_defect_only(int defect) {
  PairGoal g;
  g.product_defect = defect;
  return g;
}

std::string PairGoal::to_string() const {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += ", ";
    out += s;
  };
  if (orbits) add(*orbits == 1 ? std::string("transitive") : "orbits=" + std::to_string(*orbits));
  if (product_type) add("product type " + product_type->to_string());
  else if (product_defect) add("product defect " + std::to_string(*product_defect));
  return out.empty() ? "unconstrained" : out;
}

bool meets_goal(const Permutation& a, const Permutation& b, const PairGoal& goal) {
  const Permutation product = compose(a, b);
  if (goal.orbits && static_cast<int>(orbits(GeneratedGroup({a, b})).size()) != *goal.orbits) return false;
  if (goal.product_defect && defect(product) != *goal.product_defect) return false;
  if (goal.product_type && cycle_type(product) != *goal.product_type) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Pair search

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Fisher-Yates with the raw engine output so results do not depend on the
// standard library's distribution implementations.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

// Builds b cycle by cycle while tracking the partial product p = ab
// (x^p = (x^a)^b, so fixing b(y) = z fixes p(a^-1(y)) = z). The partial
// product is a set of chains; closed chains are finished cycles of p.
class PairSearch {
 public:
  PairSearch(const Permutation& a, const Partition& b_type, const PairGoal& goal)
      : d_(a.degree()), a_(a), goal_(goal) {
    const auto inv = a.inverse();
    a_inv_.assign(inv.zero_based().begin(), inv.zero_based().end());
    b_lengths_.assign(static_cast<std::size_t>(d_) + 1, 0);
    for (int part : b_type.parts()) ++b_lengths_[static_cast<std::size_t>(part)];
    if (goal_.product_type) {
      target_lengths_.assign(static_cast<std::size_t>(d_) + 1, 0);
      for (int part : goal_.product_type->parts()) ++target_lengths_[static_cast<std::size_t>(part)];
    }
    if (goal_.product_defect) target_cycles_ = d_ - *goal_.product_defect;
  }

  std::optional<Permutation> run(std::size_t budget, std::mt19937_64* rng) {
    reset();
    budget_ = budget;
    rng_ = rng;
    if (search()) return Permutation::from_images(found_);
    return std::nullopt;
  }

 private:
  struct Undo {
    int y = -1;
    bool closed = false;
    int closed_len = 0;
    bool target_taken = false;
    int head = -1, tail = -1, head_end = -1, tail_end = -1, head_len = 0, tail_len = 0;
    int uf_child = -1;
  };

  void reset() {
    const auto n = static_cast<std::size_t>(d_);
    b_img_.assign(n, -1);
    used_.assign(n, false);
    other_end_.resize(n);
    std::iota(other_end_.begin(), other_end_.end(), 0);
    chain_len_.assign(n, 1);
    uf_parent_.resize(n);
    std::iota(uf_parent_.begin(), uf_parent_.end(), 0);
    uf_size_.assign(n, 1);
    components_ = d_;
    for (int x = 0; x < d_; ++x) unite_permanent(x, a_.zero_based()[static_cast<std::size_t>(x)]);
    closed_ = 0;
    open_chains_ = d_;
    open_ = false;
    nodes_ = 0;
    aborted_ = false;
    remaining_b_ = b_lengths_;
    remaining_target_ = target_lengths_;
  }

  int find(int x) const {
    while (uf_parent_[static_cast<std::size_t>(x)] != x) x = uf_parent_[static_cast<std::size_t>(x)];
    return x;
  }
  void unite_permanent(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (uf_size_[static_cast<std::size_t>(x)] < uf_size_[static_cast<std::size_t>(y)]) std::swap(x, y);
    uf_parent_[static_cast<std::size_t>(y)] = x;
    uf_size_[static_cast<std::size_t>(x)] += uf_size_[static_cast<std::size_t>(y)];
    --components_;
  }

  int max_target_length() const {
    for (int len = d_; len >= 1; --len) {
      if (remaining_target_[static_cast<std::size_t>(len)] > 0) return len;
    }
    return 0;
  }

  // Sets b(y) = z and reports whether the goal is still reachable.
  bool assign(int y, int z, Undo& u) {
    u = Undo{};
    u.y = y;
    b_img_[static_cast<std::size_t>(y)] = z;
    bool feasible = true;

    const int tail = a_inv_[static_cast<std::size_t>(y)];  // p(tail) = z
    if (other_end_[static_cast<std::size_t>(tail)] == z) {
      u.closed = true;
      u.closed_len = chain_len_[static_cast<std::size_t>(tail)];
      ++closed_;
      --open_chains_;
      if (goal_.product_type) {
        auto& slot = remaining_target_[static_cast<std::size_t>(u.closed_len)];
        if (slot > 0) {
          --slot;
          u.target_taken = true;
        } else {
          feasible = false;
        }
      }
    } else {
      const int head = other_end_[static_cast<std::size_t>(tail)];
      const int end = other_end_[static_cast<std::size_t>(z)];
      u.head = head;
      u.tail = end;
      u.head_end = other_end_[static_cast<std::size_t>(head)];
      u.tail_end = other_end_[static_cast<std::size_t>(end)];
      u.head_len = chain_len_[static_cast<std::size_t>(head)];
      u.tail_len = chain_len_[static_cast<std::size_t>(end)];
      const int len = chain_len_[static_cast<std::size_t>(tail)] + chain_len_[static_cast<std::size_t>(z)];
      other_end_[static_cast<std::size_t>(head)] = end;
      other_end_[static_cast<std::size_t>(end)] = head;
      chain_len_[static_cast<std::size_t>(head)] = len;
      chain_len_[static_cast<std::size_t>(end)] = len;
      --open_chains_;
      if (goal_.product_type && len > max_target_length()) feasible = false;
    }

    int ry = find(y);
    int rz = find(z);
    if (ry != rz) {
      if (uf_size_[static_cast<std::size_t>(ry)] < uf_size_[static_cast<std::size_t>(rz)]) std::swap(ry, rz);
      uf_parent_[static_cast<std::size_t>(rz)] = ry;
      uf_size_[static_cast<std::size_t>(ry)] += uf_size_[static_cast<std::size_t>(rz)];
      --components_;
      u.uf_child = rz;
    }

    if (target_cycles_) {
      const int lo = closed_ + (open_chains_ > 0 ? 1 : 0);
      const int hi = closed_ + open_chains_;
      if (*target_cycles_ < lo || *target_cycles_ > hi) feasible = false;
    }
    if (goal_.orbits && components_ < *goal_.orbits) feasible = false;
    return feasible;
  }

  void unassign(const Undo& u) {
    if (u.uf_child >= 0) {
      const int parent = uf_parent_[static_cast<std::size_t>(u.uf_child)];
      uf_size_[static_cast<std::size_t>(parent)] -= uf_size_[static_cast<std::size_t>(u.uf_child)];
      uf_parent_[static_cast<std::size_t>(u.uf_child)] = u.uf_child;
      ++components_;
    }
    ++open_chains_;
    if (u.closed) {
      --closed_;
      if (u.target_taken) ++remaining_target_[static_cast<std::size_t>(u.closed_len)];
    } else {
      other_end_[static_cast<std::size_t>(u.tail)] = u.tail_end;
      chain_len_[static_cast<std::size_t>(u.tail)] = u.tail_len;
      other_end_[static_cast<std::size_t>(u.head)] = u.head_end;
      chain_len_[static_cast<std::size_t>(u.head)] = u.head_len;
    }
    b_img_[static_cast<std::size_t>(u.y)] = -1;
  }

  bool leaf() {
    std::vector<Point> images(static_cast<std::size_t>(d_));
    for (int x = 0; x < d_; ++x) images[static_cast<std::size_t>(x)] = b_img_[static_cast<std::size_t>(x)] + 1;
    const Permutation b = Permutation::from_images(images);
    if (!meets_goal(a_, b, goal_)) return false;
    found_ = std::move(images);
    return true;
  }

  std::vector<int> ordered(std::vector<int> items) {
    if (rng_) shuffle(items, *rng_);
    return items;
  }

  bool search() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (!open_) {
      int start = 0;
      while (start < d_ && used_[static_cast<std::size_t>(start)]) ++start;
      if (start == d_) return leaf();
      std::vector<int> lengths;
      for (int len = d_; len >= 1; --len) {
        if (remaining_b_[static_cast<std::size_t>(len)] > 0) lengths.push_back(len);
      }
      for (int len : ordered(std::move(lengths))) {
        --remaining_b_[static_cast<std::size_t>(len)];
        used_[static_cast<std::size_t>(start)] = true;
        open_ = true;
        start_ = last_ = start;
        cycle_len_ = 1;
        target_len_ = len;
        if (search()) return true;
        open_ = false;
        used_[static_cast<std::size_t>(start)] = false;
        ++remaining_b_[static_cast<std::size_t>(len)];
        if (aborted_) return false;
      }
      return false;
    }
    if (cycle_len_ == target_len_) {
      Undo u;
      const int saved_start = start_, saved_last = last_, saved_len = cycle_len_, saved_target = target_len_;
      if (assign(last_, start_, u)) {
        open_ = false;
        if (search()) return true;
        open_ = true;
        start_ = saved_start;
        last_ = saved_last;
        cycle_len_ = saved_len;
        target_len_ = saved_target;
      }
      unassign(u);
      return false;
    }
    std::vector<int> candidates;
    for (int z = 0; z < d_; ++z) {
      if (!used_[static_cast<std::size_t>(z)]) candidates.push_back(z);
    }
    for (int z : ordered(std::move(candidates))) {
      Undo u;
      used_[static_cast<std::size_t>(z)] = true;
      const int prev = last_;
      if (assign(prev, z, u)) {
        last_ = z;
        ++cycle_len_;
        if (search()) return true;
        --cycle_len_;
        last_ = prev;
      }
      unassign(u);
      used_[static_cast<std::size_t>(z)] = false;
      if (aborted_) return false;
    }
    return false;
  }

  int d_;
  Permutation a_;
  PairGoal goal_;
  std::vector<int> a_inv_;
  std::vector<int> b_lengths_;
  std::vector<int> target_lengths_;
  std::optional<int> target_cycles_;

  std::vector<int> b_img_;
  std::vector<bool> used_;
  std::vector<int> other_end_;
  std::vector<int> chain_len_;
  std::vector<int> uf_parent_;
  std::vector<int> uf_size_;
  std::vector<int> remaining_b_;
  std::vector<int> remaining_target_;
  int components_ = 0;
  int closed_ = 0;
  int open_chains_ = 0;

  bool open_ = false;
  int start_ = 0, last_ = 0, cycle_len_ = 0, target_len_ = 0;

  std::size_t budget_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  std::mt19937_64* rng_ = nullptr;
  std::vector<Point> found_;
};

}  // namespace

std::pair<Permutation, Permutation> assemble_pair(const Partition& a_type, const Partition& b_type,
                                                  const PairGoal& goal, const SearchOptions& options) {
  if (a_type.degree() != b_type.degree()) throw std::invalid_argument("partitions of different degrees");
  const int d = a_type.degree();
  const Permutation a = canonical_element(a_type);
  const int parity = (a_type.nu() + b_type.nu()) % 2;
  if (goal.product_type && goal.product_type->degree() != d) {
    throw std::invalid_argument("goal product type has the wrong degree");
  }
  const std::optional<int> wanted =
      goal.product_type ? std::optional<int>(goal.product_type->nu()) : goal.product_defect;
  if (wanted && (*wanted % 2 != parity || *wanted > a_type.nu() + b_type.nu() ||
                 *wanted < std::abs(a_type.nu() - b_type.nu()))) {
    throw SearchExhausted("goal unreachable for " + a_type.to_string() + " x " + b_type.to_string() + ": " +
                          goal.to_string());
  }

  PairSearch search(a, b_type, goal);
  for (int attempt = 0; attempt < std::max(1, options.restarts); ++attempt) {
    std::mt19937_64 rng(mix(options.seed, static_cast<std::uint64_t>(attempt)));
    auto b = search.run(options.node_budget, attempt == 0 ? nullptr : &rng);
    if (b) return {a, *b};
  }
  throw SearchExhausted("no pair " + a_type.to_string() + " x " + b_type.to_string() + " with " +
                        goal.to_string());
}

// ---------------------------------------------------------------------------
// Verification

Certificate verify_witness(const BranchData& data, const HurwitzWitness& witness) {
  Certificate cert;
  const int d = data.degree();
  const int s = data.row_count();
  cert.euler_char = d - total_defect(data);

  bool shape_ok = witness.degree == d && witness.alpha.degree() == d &&
                  static_cast<int>(witness.gammas.size()) == s && static_cast<int>(witness.row_order.size()) == s;
  for (const Permutation& g : witness.gammas) shape_ok = shape_ok && g.degree() == d;
  if (shape_ok) {
    std::vector<int> position(static_cast<std::size_t>(s), -1);
    for (int i = 0; i < s; ++i) {
      const int row = witness.row_order[static_cast<std::size_t>(i)];
      if (row < 0 || row >= s || position[static_cast<std::size_t>(row)] != -1) {
        shape_ok = false;
        break;
      }
      position[static_cast<std::size_t>(row)] = i;
    }
    if (shape_ok) cert.row_permutation_applied = std::move(position);
  }
  if (!shape_ok) return cert;

  cert.row_types_ok = true;
  for (int i = 0; i < s; ++i) {
    const Partition& row = data.rows()[static_cast<std::size_t>(witness.row_order[static_cast<std::size_t>(i)])];
    if (cycle_type(witness.gammas[static_cast<std::size_t>(i)]) != row) cert.row_types_ok = false;
  }
  const Permutation alpha_inv = witness.alpha.inverse();
  cert.relation_ok = compose_all(witness.gammas) == compose(alpha_inv, alpha_inv);

  std::vector<Permutation> gens{witness.alpha};
  gens.insert(gens.end(), witness.gammas.begin(), witness.gammas.end());
  const GeneratedGroup group(std::move(gens));
  cert.transitive = is_transitive(group);
  if (cert.transitive) {
    if (d == 1) {
      cert.primitive = true;
    } else {
      Primitivity prim = is_primitive(group);
      cert.primitive = prim.primitive;
      cert.witness_block = std::move(prim.block);
    }
  }
  return cert;
}

std::string to_string(EnginePath path) {
  switch (path) {
    case EnginePath::ProofGuided: return "proof-guided";
    case EnginePath::Fallback: return "fallback";
    case EnginePath::DecomposableSearch: return "decomposable-search";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Indecomposable construction

namespace {

int parity_fit(int value, int parity, int lo, int hi) {
  if (((value % 2) + 2) % 2 == parity) return value;
  if (value + 1 <= hi) return value + 1;
  if (value - 1 >= lo) return value - 1;
  return -1;
}

struct Schedule {
  std::vector<int> order;  // witness position -> input row
  int final_target = 0;    // defect of the running product before the last row
};

// Folds rows order[0..s-2] into a running product whose defect walks toward
// schedule.final_target, then closes with a transitive pair whose product is
// a (d-1)-cycle. Throws SearchExhausted when a step has no solution.
Realization fold(const BranchData& data, const Schedule& schedule, const SearchOptions& options,
                 std::uint64_t salt) {
  const int d = data.degree();
  const int s = data.row_count();
  const auto& rows = data.rows();
  auto nu_at = [&](int position) { return rows[static_cast<std::size_t>(schedule.order[static_cast<std::size_t>(position)])].nu(); };

  Realization out;
  out.witness.degree = d;
  out.witness.row_order = schedule.order;

  Permutation acc = canonical_element(rows[static_cast<std::size_t>(schedule.order[0])]);
  out.witness.gammas.push_back(acc);
  int remaining = 0;
  for (int i = 1; i < s; ++i) remaining += nu_at(i);
  out.trace.push_back({schedule.order[0], "first row", defect(acc), remaining});

  const int target = schedule.final_target;
  int rem_middle = 0;
  for (int i = 1; i < s - 1; ++i) rem_middle += nu_at(i);

  for (int i = 1; i < s - 1; ++i) {
    const int nu = nu_at(i);
    rem_middle -= nu;
    remaining -= nu;
    const int current = defect(acc);
    const int lo = std::max(std::abs(current - nu), target - rem_middle);
    const int hi = std::min({current + nu, target + rem_middle, d - 1});
    const int step = parity_fit(std::clamp(target, lo, std::max(lo, hi)), (current + nu) % 2, lo, hi);
    if (lo > hi || step < 0) throw SearchExhausted("defect schedule infeasible at row " + std::to_string(i));

    const PairGoal goal = PairGoal::product_defect_only(step);
    SearchOptions step_options = options;
    step_options.seed = mix(options.seed, salt * 131 + static_cast<std::uint64_t>(i));
    const Partition& row = rows[static_cast<std::size_t>(schedule.order[static_cast<std::size_t>(i)])];
    auto [x, y] = assemble_pair(cycle_type(acc), row, goal, step_options);
    const Permutation lambda = *conjugator(x, acc);
    const Permutation gamma = conjugate(y, lambda);
    acc = compose(acc, gamma);
    out.witness.gammas.push_back(gamma);
    out.trace.push_back({schedule.order[static_cast<std::size_t>(i)], goal.to_string(), defect(acc), remaining});
  }

  const Partition& last = rows[static_cast<std::size_t>(schedule.order.back())];
  const PairGoal goal = PairGoal::transitive_near_full_cycle(d);
  SearchOptions last_options = options;
  last_options.seed = mix(options.seed, salt * 131 + static_cast<std::uint64_t>(s));
  auto [x, y] = assemble_pair(cycle_type(acc), last, goal, last_options);
  const Permutation lambda = *conjugator(x, acc);
  const Permutation gamma = conjugate(y, lambda);
  const Permutation product = compose(acc, gamma);
  out.witness.gammas.push_back(gamma);
  out.trace.push_back({schedule.order.back(), goal.to_string(), defect(product), 0});

  out.witness.alpha = sqrt(product)->inverse();
  out.certificate = verify_witness(data, out.witness);
  return out;
}

std::optional<int> default_final_target(const BranchData& data, const std::vector<int>& order) {
  const int d = data.degree();
  int before_last = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) before_last += data.rows()[static_cast<std::size_t>(order[i])].nu();
  const int last_nu = data.rows()[static_cast<std::size_t>(order.back())].nu();
  const int cap = (before_last % 2 == (d - 1) % 2) ? d - 1 : d - 2;
  const int target = std::min(before_last, cap);
  // The closing pair needs nu(acc) + nu(last) >= d.
  if (target + last_nu < d) return std::nullopt;
  return target;
}

}  // namespace

Realization realize_indecomposable(const BranchData& data, const SearchOptions& options) {
  const Classification c = classify(data);
  if (c.verdict != Verdict::IndecomposableRealizable) {
    throw std::invalid_argument("branch data is not classified as indecomposably realizable: " + c.to_string());
  }
  const int s = data.row_count();
  const int d = data.degree();

  // Proof-guided: one row that is not all twos goes last.
  Schedule guided;
  guided.order.resize(static_cast<std::size_t>(s));
  std::iota(guided.order.begin(), guided.order.end(), 0);
  for (int i = 0; i < s; ++i) {
    if (!data.rows()[static_cast<std::size_t>(i)].is_all_twos()) {
      guided.order.erase(guided.order.begin() + i);
      guided.order.push_back(i);
      break;
    }
  }
  if (auto target = default_final_target(data, guided.order)) {
    guided.final_target = *target;
    try {
      Realization r = fold(data, guided, options, 0);
      if (r.certificate.all_ok()) {
        r.path = EnginePath::ProofGuided;
        r.seed = options.seed;
        return r;
      }
    } catch (const SearchExhausted&) {
    }
  }

  // Fallback: random row orders and final targets, same postcondition.
  std::mt19937_64 rng(mix(options.seed, 0xfa11bacc));
  for (int attempt = 1; attempt <= options.fallback_attempts; ++attempt) {
    Schedule schedule;
    schedule.order = guided.order;
    shuffle(schedule.order, rng);
    int before_last = 0;
    for (int i = 0; i + 1 < s; ++i) before_last += data.rows()[static_cast<std::size_t>(schedule.order[static_cast<std::size_t>(i)])].nu();
    const int last_nu = data.rows()[static_cast<std::size_t>(schedule.order.back())].nu();
    std::vector<int> targets;
    for (int t = d - last_nu; t <= std::min(before_last, d - 1); ++t) {
      if (t >= 0 && t % 2 == before_last % 2) targets.push_back(t);
    }
    if (targets.empty()) continue;
    schedule.final_target = targets[static_cast<std::size_t>(rng() % targets.size())];
    try {
      Realization r = fold(data, schedule, options, static_cast<std::uint64_t>(attempt));
      if (r.certificate.all_ok()) {
        r.path = EnginePath::Fallback;
        r.seed = options.seed;
        return r;
      }
    } catch (const SearchExhausted&) {
    }
  }
  throw SearchExhausted("no indecomposable witness found for " + data.to_string());
}

// ---------------------------------------------------------------------------
// Decomposable search

std::optional<Realization> realize_decomposable_search(const BranchData& data, std::size_t budget,
                                                       std::uint64_t seed) {
  if (!is_admissible(data).admissible) return std::nullopt;
  const int d = data.degree();
  bool has_divisor = false;
  for (int k = 2; k * k <= d; ++k) has_divisor = has_divisor || d % k == 0;
  if (!has_divisor) return std::nullopt;

  const int s = data.row_count();
  std::mt19937_64 rng(mix(seed, 0xdec0));
  std::vector<Permutation> gammas;
  std::vector<Point> shuffle_points(static_cast<std::size_t>(d));
  for (std::size_t iter = 0; iter < budget; ++iter) {
    gammas.clear();
    for (int i = 0; i < s; ++i) {
      const Permutation rep = canonical_element(data.rows()[static_cast<std::size_t>(i)]);
      if (i == 0) {
        gammas.push_back(rep);
        continue;
      }
      std::iota(shuffle_points.begin(), shuffle_points.end(), 1);
      shuffle(shuffle_points, rng);
      gammas.push_back(conjugate(rep, Permutation::from_images(shuffle_points)));
    }
    const Permutation product = compose_all(gammas);
    if (!is_square(product)) continue;
    std::vector<Permutation> roots;
    try {
      roots = all_square_roots(product, 512);
    } catch (const CapExceeded&) {
      roots = {*sqrt(product)};
    }
    for (const Permutation& root : roots) {
      HurwitzWitness w;
      w.degree = d;
      w.alpha = root.inverse();
      w.gammas = gammas;
      w.row_order.resize(static_cast<std::size_t>(s));
      std::iota(w.row_order.begin(), w.row_order.end(), 0);
      Certificate cert = verify_witness(data, w);
      if (cert.relation_ok && cert.row_types_ok && cert.transitive && !cert.primitive) {
        Realization r;
        r.witness = std::move(w);
        r.certificate = std::move(cert);
        r.path = EnginePath::DecomposableSearch;
        r.seed = seed;
        return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace hurwitz
