#include "hurwitz/oracle.hpp"

#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hurwitz/classes.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/squares.hpp"

namespace hurwitz {

void check_bounds(const BranchData& data, const SearchBounds& bounds) {
  if (data.degree() > bounds.max_degree) {
    throw BoundsExceeded("degree " + std::to_string(data.degree()) + " exceeds max degree " +
                         std::to_string(bounds.max_degree));
  }
  if (data.row_count() > bounds.max_rows) {
    throw BoundsExceeded(std::to_string(data.row_count()) + " rows exceed max rows " +
                         std::to_string(bounds.max_rows));
  }
}

namespace {

constexpr std::size_t kClassCap = 5'000'000;

bool transitive_with(const std::vector<Permutation>& gammas, const Permutation* extra) {
  std::vector<Permutation> gens;
  if (extra) gens.push_back(*extra);
  gens.insert(gens.end(), gammas.begin(), gammas.end());
  return is_transitive(GeneratedGroup(std::move(gens)));
}

bool primitive_group(const std::vector<Permutation>& gens) {
  const GeneratedGroup group(gens);
  if (!is_transitive(group)) return false;
  if (group.degree() < 2) return true;
  return is_primitive(group).primitive;
}

HurwitzWitness make_witness(int degree, const Permutation& root, const std::vector<Permutation>& gammas) {
  HurwitzWitness w;
  w.degree = degree;
  w.alpha = root.inverse();
  w.gammas = gammas;
  w.row_order.resize(gammas.size());
  std::iota(w.row_order.begin(), w.row_order.end(), 0);
  return w;
}

// Enumerates gamma tuples with gammas[0] fixed to the canonical element of
// row 0. The second row's class is split into contiguous chunks, one per
// worker; a visitor returning true stops its chunk.
class TupleSpace {
 public:
  TupleSpace(const BranchData& data, const SearchBounds& bounds) : data_(data), bounds_(bounds) {
    check_bounds(data, bounds);
    first_ = canonical_element(data.rows().front());
    for (int i = 1; i < data.row_count(); ++i) {
      classes_.push_back(class_elements(data.rows()[static_cast<std::size_t>(i)], kClassCap));
    }
  }

  int chunk_count() const {
    if (classes_.empty()) return 1;
    return std::max(1, std::min<int>(bounds_.workers, static_cast<int>(classes_.front().size())));
  }

  // visit(gammas, product) -> stop?
  void run_chunk(int chunk, const std::function<bool(const std::vector<Permutation>&, const Permutation&)>& visit,
                 const std::function<bool()>& cancelled) const {
    std::vector<Permutation> gammas{first_};
    if (classes_.empty()) {
      visit(gammas, first_);
      return;
    }
    const std::size_t n = classes_.front().size();
    const auto chunks = static_cast<std::size_t>(chunk_count());
    const std::size_t lo = n * static_cast<std::size_t>(chunk) / chunks;
    const std::size_t hi = n * static_cast<std::size_t>(chunk + 1) / chunks;
    std::vector<Permutation> prefix{first_};
    std::function<bool(std::size_t)> level = [&](std::size_t depth) -> bool {
      const auto& cls = classes_[depth];
      const std::size_t begin = depth == 0 ? lo : 0;
      const std::size_t end = depth == 0 ? hi : cls.size();
      for (std::size_t k = begin; k < end; ++k) {
        if (depth == 0 && cancelled()) return true;
        gammas.push_back(cls[k]);
        prefix.push_back(compose(prefix.back(), cls[k]));
        const bool stop = depth + 1 == classes_.size() ? visit(gammas, prefix.back()) : level(depth + 1);
        prefix.pop_back();
        gammas.pop_back();
        if (stop) return true;
      }
      return false;
    };
    level(0);
  }

  const BranchData& data() const { return data_; }
  const SearchBounds& bounds() const { return bounds_; }

 private:
  const BranchData& data_;
  const SearchBounds& bounds_;
  Permutation first_;
  std::vector<std::vector<Permutation>> classes_;
};

template <typename ChunkFn>
void for_each_chunk(int chunks, ChunkFn&& fn) {
  if (chunks == 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(chunks));
  for (int c = 0; c < chunks; ++c) threads.emplace_back([&fn, c] { fn(c); });
  for (auto& t : threads) t.join();
}

// First witness in enumeration order whose group is transitive, and primitive
// when asked. Later chunks stop once an earlier chunk has an answer.
std::optional<HurwitzWitness> find_first(const BranchData& data, const SearchBounds& bounds, bool need_primitive) {
  const TupleSpace space(data, bounds);
  const int chunks = space.chunk_count();
  std::vector<std::optional<HurwitzWitness>> found(static_cast<std::size_t>(chunks));
  std::atomic<int> best{chunks};
  const int d = data.degree();

  for_each_chunk(chunks, [&](int chunk) {
    auto cancelled = [&] { return best.load() < chunk; };
    space.run_chunk(
        chunk,
        [&](const std::vector<Permutation>& gammas, const Permutation& product) {
          if (!is_square(product)) return false;
          // Any root works once the gammas alone do the job.
          const bool alone = need_primitive ? primitive_group(gammas) : transitive_with(gammas, nullptr);
          std::optional<Permutation> root;
          if (alone) {
            root = sqrt(product);
          } else {
            for (const Permutation& beta : all_square_roots(product, bounds.root_cap)) {
              std::vector<Permutation> gens{beta};
              gens.insert(gens.end(), gammas.begin(), gammas.end());
              const bool ok = need_primitive ? primitive_group(gens) : transitive_with(gammas, &beta);
              if (ok) {
                root = beta;
                break;
              }
            }
          }
          if (!root) return false;
          found[static_cast<std::size_t>(chunk)] = make_witness(d, *root, gammas);
          int expected = best.load();
          while (chunk < expected && !best.compare_exchange_weak(expected, chunk)) {
          }
          return true;
        },
        cancelled);
  });
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace

std::optional<HurwitzWitness> find_realization(const BranchData& data, const SearchBounds& bounds) {
  return find_first(data, bounds, false);
}

bool exists_realization(const BranchData& data, const SearchBounds& bounds) {
  return find_realization(data, bounds).has_value();
}

std::optional<HurwitzWitness> find_primitive_realization(const BranchData& data, const SearchBounds& bounds) {
  return find_first(data, bounds, true);
}

bool exists_primitive_realization(const BranchData& data, const SearchBounds& bounds) {
  return find_primitive_realization(data, bounds).has_value();
}

RealizationSurvey survey_realizations(const BranchData& data, const SearchBounds& bounds, bool collect_groups) {
  const TupleSpace space(data, bounds);
  const int chunks = space.chunk_count();
  std::vector<RealizationSurvey> parts(static_cast<std::size_t>(chunks));
  const int d = data.degree();

  for_each_chunk(chunks, [&](int chunk) {
    RealizationSurvey& part = parts[static_cast<std::size_t>(chunk)];
    space.run_chunk(
        chunk,
        [&](const std::vector<Permutation>& gammas, const Permutation& product) {
          ++part.gamma_tuples;
          if (!is_square(product)) return false;
          ++part.square_products;
          for (const Permutation& beta : all_square_roots(product, bounds.root_cap)) {
            ++part.witnesses;
            std::vector<Permutation> gens{beta.inverse()};
            gens.insert(gens.end(), gammas.begin(), gammas.end());
            const GeneratedGroup group(gens);
            if (!is_transitive(group)) {
              ++part.intransitive;
              if (!part.sample_intransitive) part.sample_intransitive = make_witness(d, beta, gammas);
              continue;
            }
            if (collect_groups) part.transitive_groups.push_back(gens);
            if (d < 2 || is_primitive(group).primitive) {
              ++part.transitive_primitive;
              if (!part.sample_primitive) part.sample_primitive = make_witness(d, beta, gammas);
            } else {
              ++part.transitive_imprimitive;
              if (!part.sample_imprimitive) part.sample_imprimitive = make_witness(d, beta, gammas);
            }
          }
          return false;
        },
        [] { return false; });
  });

  RealizationSurvey total;
  for (RealizationSurvey& part : parts) {
    total.gamma_tuples += part.gamma_tuples;
    total.square_products += part.square_products;
    total.witnesses += part.witnesses;
    total.intransitive += part.intransitive;
    total.transitive_primitive += part.transitive_primitive;
    total.transitive_imprimitive += part.transitive_imprimitive;
    if (!total.sample_intransitive) total.sample_intransitive = std::move(part.sample_intransitive);
    if (!total.sample_primitive) total.sample_primitive = std::move(part.sample_primitive);
    if (!total.sample_imprimitive) total.sample_imprimitive = std::move(part.sample_imprimitive);
    for (auto& g : part.transitive_groups) total.transitive_groups.push_back(std::move(g));
  }
  return total;
}

std::optional<Permutation> pair_conjugator_to_canonical(const Permutation& p, const Permutation& q) {
  const int d = p.degree();
  if (d < 4 || d % 2 != 0 || q.degree() != d) return std::nullopt;
  const Partition twos = Partition::all_twos(d);
  if (cycle_type(p) != twos || cycle_type(q) != twos) return std::nullopt;
  // Walk 1, 1^p, 1^pq, ... ; the canonical pair walks 1, 2, 3, ...
  std::vector<Point> walk;
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  Point x = 1;
  for (int i = 0; i < d; ++i) {
    if (seen[static_cast<std::size_t>(x - 1)]) return std::nullopt;
    seen[static_cast<std::size_t>(x - 1)] = true;
    walk.push_back(x);
    x = i % 2 == 0 ? p(x) : q(x);
  }
  const Permutation lambda = Permutation::from_images(walk);
  const auto [p0, q0] = canonical_involution_pair(d);
  if (conjugate(p, lambda) != p0 || conjugate(q, lambda) != q0) return std::nullopt;
  return lambda;
}

InvolutionSurvey involution_pair_survey(int degree, const SearchBounds& bounds) {
  if (degree < 4 || degree % 2 != 0) throw std::invalid_argument("involution survey needs even d >= 4");
  if (degree > bounds.max_degree + 2) {
    throw BoundsExceeded("degree " + std::to_string(degree) + " exceeds max degree + 2 = " +
                         std::to_string(bounds.max_degree + 2));
  }
  const std::vector<Permutation> involutions = class_elements(Partition::all_twos(degree), kClassCap);
  PointSet odd_points;
  for (Point x = 1; x <= degree; x += 2) odd_points.push_back(x);

  const int chunks = std::max(1, std::min<int>(bounds.workers, static_cast<int>(involutions.size())));
  std::vector<InvolutionSurvey> parts(static_cast<std::size_t>(chunks));
  for_each_chunk(chunks, [&](int chunk) {
    InvolutionSurvey& part = parts[static_cast<std::size_t>(chunk)];
    const std::size_t n = involutions.size();
    const std::size_t lo = n * static_cast<std::size_t>(chunk) / static_cast<std::size_t>(chunks);
    const std::size_t hi = n * static_cast<std::size_t>(chunk + 1) / static_cast<std::size_t>(chunks);
    for (std::size_t i = lo; i < hi; ++i) {
      for (const Permutation& q : involutions) {
        const Permutation& p = involutions[i];
        ++part.pairs_examined;
        const GeneratedGroup group({p, q});
        if (!is_transitive(group)) continue;
        ++part.transitive_pairs;
        const Primitivity prim = is_primitive(group);
        if (!prim.primitive) ++part.imprimitive_pairs;
        const auto lambda = pair_conjugator_to_canonical(p, q);
        if (!lambda) continue;
        ++part.conjugate_to_canonical;
        PointSet relabeled;
        for (Point x : odd_points) relabeled.push_back((*lambda)(x));
        std::sort(relabeled.begin(), relabeled.end());
        if (is_block(group, relabeled)) {
          ++part.canonical_block_pairs;
          if (!part.sample) {
            part.sample = std::make_pair(p, q);
            part.sample_block = relabeled;
          }
        }
      }
    }
  });

  InvolutionSurvey total;
  total.degree = degree;
  for (InvolutionSurvey& part : parts) {
    total.pairs_examined += part.pairs_examined;
    total.transitive_pairs += part.transitive_pairs;
    total.imprimitive_pairs += part.imprimitive_pairs;
    total.canonical_block_pairs += part.canonical_block_pairs;
    total.conjugate_to_canonical += part.conjugate_to_canonical;
    if (!total.sample) {
      total.sample = std::move(part.sample);
      total.sample_block = std::move(part.sample_block);
    }
  }
  return total;
}

std::optional<Classification> classify_by_search(const BranchData& data, const SearchBounds& bounds) {
  if (data.degree() > bounds.max_degree || data.row_count() > bounds.max_rows) return std::nullopt;
  Classification out;
  if (!exists_realization(data, bounds)) {
    out.verdict = Verdict::NotAdmissible;
    out.detail = "no transitive witness exists";
  } else if (exists_primitive_realization(data, bounds)) {
    out.verdict = Verdict::IndecomposableRealizable;
    out.realizable_case = RealizableCase::ExhaustiveSearch;
    out.detail = "primitive witness found by exhaustive search";
  } else {
    out.verdict = Verdict::OnlyDecomposable;
    out.reason = DecomposableReason::ExhaustiveSearch;
    out.detail = "exhaustive search found only imprimitive witnesses";
  }
  return out;
}

Classification classify_with_oracle(const BranchData& data, const SearchBounds& bounds) {
  Classification c = classify(data);
  if (c.verdict != Verdict::UnknownOddDegree) return c;
  if (auto searched = classify_by_search(data, bounds)) return *searched;
  return c;
}

}  // namespace hurwitz
