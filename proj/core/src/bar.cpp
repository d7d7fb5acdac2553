#include "hhl/bar.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cstdlib>
#include <cstring>
#include <unordered_map>

#include "hhl/errors.hpp"
#include "hhl/homology.hpp"

namespace hhl {
namespace {

// Chain groups above this size skip the d o d = 0 self-check.
constexpr std::uint64_t kVerifyLimit = 50'000;

struct BarAlgebra {
  HeckeContextPtr ctx;
  std::vector<SignedPermutation> elems;  // non-identity elements, canonical order
  std::unordered_map<SignedPermutation, std::uint32_t> index;
  // products[v * A + w]: coordinates of e_v e_w in the e-basis.
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> products;

  std::size_t size() const { return elems.size(); }
};

std::uint64_t saturating_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t group_order(CoxeterType type, int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  if (type == CoxeterType::B) r <<= n;
  return r;
}

BarAlgebra make_algebra(CoxeterType type, int n, const ScalarConfig& scalars, bool with_products) {
  BarAlgebra a;
  a.ctx = HeckeContext::make(n, scalars);
  for (const auto& g : all_elements(n, type)) {
    if (g.is_identity()) continue;
    a.index.emplace(g, static_cast<std::uint32_t>(a.elems.size()));
    a.elems.push_back(g);
  }
  if (!with_products) return a;
  const std::size_t A = a.size();
  std::vector<Scalar> eps;
  for (const auto& g : a.elems) eps.push_back(scalars.q_pow(length(g)));
  a.products.resize(A * A);
  for (std::size_t v = 0; v < A; ++v) {
    const HeckeElement tv = t_of(a.ctx, a.elems[v]);
    for (std::size_t w = 0; w < A; ++w) {
      HeckeElement prod = mul(tv, t_of(a.ctx, a.elems[w]));
      prod.add_term(a.elems[v], -eps[w]);
      prod.add_term(a.elems[w], -eps[v]);
      auto& out = a.products[v * A + w];
      for (const auto& [x, c] : prod.terms()) {
        if (x.is_identity()) continue;
        out.emplace_back(a.index.at(x), c);
      }
    }
  }
  return a;
}

LabeledComplex build_bar(const BarAlgebra& alg, CoxeterType type, int n, int d_max, const ScalarConfig& scalars,
                         bool with_labels) {
  const std::size_t A = alg.size();
  LabeledComplex c;
  c.info.kind = "bar";
  c.info.n = n;
  c.info.field = scalars.field;
  c.info.q = scalars.q;
  c.info.params["type"] = type == CoxeterType::B ? "B" : "A";
  c.lo = 0;
  c.hi = d_max + 1;
  const Scalar one = scalars.one();
  for (int k = c.lo; k <= c.hi; ++k) {
    const std::size_t dim = static_cast<std::size_t>(saturating_pow(A, k));
    c.dims.push_back(dim);
    if (with_labels) {
      std::vector<Label> labels;
      labels.reserve(dim);
      for (std::size_t idx = 0; idx < dim; ++idx) {
        BarTuple t;
        t.factors.resize(static_cast<std::size_t>(k));
        std::size_t rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          t.factors[static_cast<std::size_t>(i)] = alg.elems[rest % A];
          rest /= A;
        }
        labels.emplace_back(std::move(t));
      }
      c.bases.push_back(std::move(labels));
    }
    const std::size_t rows = k == 0 ? 0 : static_cast<std::size_t>(saturating_pow(A, k - 1));
    std::vector<SparseEntry> entries;
    if (k >= 2) {
      std::vector<std::size_t> digits(static_cast<std::size_t>(k));
      for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (int i = k - 1; i >= 0; --i) {
          digits[static_cast<std::size_t>(i)] = rest % A;
          rest /= A;
        }
        for (int i = 1; i <= k - 1; ++i) {
          // Merge factors i and i+1 (1-based), i.e. digits i-1 and i.
          const auto& prod = alg.products[digits[static_cast<std::size_t>(i - 1)] * A + digits[static_cast<std::size_t>(i)]];
          std::size_t prefix = 0;
          for (int a = 0; a < i - 1; ++a) prefix = prefix * A + digits[static_cast<std::size_t>(a)];
          std::size_t suffix = 0, suffix_scale = 1;
          for (int a = i + 1; a < k; ++a) {
            suffix = suffix * A + digits[static_cast<std::size_t>(a)];
            suffix_scale *= A;
          }
          const Scalar sign = (i % 2 == 0) ? one : -one;
          for (const auto& [x, coef] : prod) {
            const std::size_t row = ((prefix * A) + x) * suffix_scale + suffix;
            entries.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), sign * coef});
          }
        }
      }
    }
    c.boundaries.push_back(SparseMatrix::from_triplets(rows, dim, scalars.field, std::move(entries)));
  }
  return c;
}

struct HomologyBases {
  ReducedBasis boundaries;
  ReducedBasis reps;
};

HomologyBases homology_bases(const LabeledComplex& bar, int d) {
  const Field field = bar.field();
  HomologyBases hb{column_space(bar.boundary(d + 1)), ReducedBasis(bar.dim(d), field)};
  for (auto& z : kernel_basis(bar.boundary(d))) hb.reps.insert(hb.boundaries.reduce(std::move(z)));
  return hb;
}

}  // namespace

std::uint64_t guard_from_env() {
  const char* env = std::getenv("HHL_GUARD");
  if (!env || !*env) return kDefaultGuard;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || *ptr != '\0' || v == 0) throw ConfigError("HHL_GUARD must be a positive integer");
  return v;
}

std::uint64_t bar_size_estimate(CoxeterType type, int n, int d_max) {
  const std::uint64_t A = group_order(type, n) - 1;
  std::uint64_t best = 1;
  for (int k = 0; k <= d_max + 1; ++k) best = std::max(best, saturating_pow(A, k));
  return best;
}

void check_guard(CoxeterType type, int n, int d_max, std::uint64_t guard) {
  if (n < 0 || n > kMaxRank) throw RankError("bar complex rank out of range");
  if (d_max < 0) throw ConfigError("degree must be non-negative");
  const std::uint64_t est = bar_size_estimate(type, n, d_max);
  if (est > guard) {
    throw GuardError("bar complex for rank " + std::to_string(n) + " up to degree " + std::to_string(d_max + 1) +
                         " needs " + std::to_string(est) + " basis tuples (guard " + std::to_string(guard) + ")",
                     est, guard);
  }
}

LabeledComplex bar_complex(CoxeterType type, int n, int d_max, const ScalarConfig& scalars, std::uint64_t guard,
                           bool with_labels) {
  check_guard(type, n, d_max, guard);
  auto alg = make_algebra(type, n, scalars, d_max >= 1);
  return build_bar(alg, type, n, d_max, scalars, with_labels);
}

std::vector<std::size_t> bar_tor_dims(CoxeterType type, int n, int d_max, const ScalarConfig& scalars,
                                      std::uint64_t guard) {
  auto bar = bar_complex(type, n, d_max, scalars, guard);
  HomologyOptions opts;
  opts.verify_boundary = bar_size_estimate(type, n, d_max) <= kVerifyLimit;
  auto rep = homology_dims(bar, opts);
  std::vector<std::size_t> out;
  for (int d = 0; d <= d_max; ++d) out.push_back(rep.betti.at(d));
  return out;
}

StabilizationReport stabilization_map(CoxeterType type, int n, int d, const ScalarConfig& scalars,
                                      std::uint64_t guard) {
  if (n < 1) throw RankError("stabilization needs n >= 1");
  check_guard(type, n, d, guard);
  auto src_alg = make_algebra(type, n - 1, scalars, d >= 1);
  auto tgt_alg = make_algebra(type, n, scalars, d >= 1);
  auto src = build_bar(src_alg, type, n - 1, d, scalars, false);
  auto tgt = build_bar(tgt_alg, type, n, d, scalars, false);
  HomologyOptions hopts;
  hopts.verify_boundary = bar_size_estimate(type, n, d) <= kVerifyLimit;

  StabilizationReport rep;
  rep.type = type;
  rep.n = n;
  rep.d = d;
  rep.dim_source = homology_dims(src, hopts).betti_at(d);
  rep.dim_target = homology_dims(tgt, hopts).betti_at(d);
  if (rep.dim_source == 0 || rep.dim_target == 0) {
    rep.matrix.assign(rep.dim_target, std::vector<Scalar>(rep.dim_source, scalars.zero()));
    rep.rank = 0;
    rep.injective = rep.dim_source == 0;
    rep.surjective = rep.dim_target == 0;
    return rep;
  }

  auto src_h = homology_bases(src, d);
  auto tgt_h = homology_bases(tgt, d);
  if (src_h.reps.size() != rep.dim_source || tgt_h.reps.size() != rep.dim_target) {
    throw IntegrityError("homology bases disagree with the sparse Betti numbers");
  }

  const std::size_t As = src_alg.size();
  const std::size_t At = tgt_alg.size();
  std::vector<std::size_t> embed(As);
  for (std::size_t i = 0; i < As; ++i) embed[i] = tgt_alg.index.at(src_alg.elems[i].embedded(n));

  rep.matrix.assign(rep.dim_target, std::vector<Scalar>(rep.dim_source, scalars.zero()));
  for (std::size_t j = 0; j < rep.dim_source; ++j) {
    const DenseVector& h = src_h.reps.vectors()[j];
    DenseVector image = zero_vector(tgt.dim(d), scalars.field);
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      if (h[idx].is_zero()) continue;
      std::size_t rest = idx, target = 0, scale = 1;
      for (int k = 0; k < d; ++k) {
        target += embed[rest % As] * scale;
        rest /= As;
        scale *= At;
      }
      image[target] += h[idx];
    }
    image = tgt_h.boundaries.reduce(std::move(image));
    for (std::size_t i = 0; i < rep.dim_target; ++i) rep.matrix[i][j] = image[tgt_h.reps.pivots()[i]];
  }
  rep.rank = dense_rank(rep.matrix, scalars.field);
  rep.injective = rep.rank == rep.dim_source;
  rep.surjective = rep.rank == rep.dim_target;
  return rep;
}

}  // namespace hhl
