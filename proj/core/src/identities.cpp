#include "hhl/identities.hpp"

#include "hhl/coxeter.hpp"
#include "hhl/errors.hpp"
#include "hhl/hecke.hpp"

namespace hhl {
namespace {

class FamilyRecorder {
 public:
  explicit FamilyRecorder(std::string name) { result_.family = std::move(name); }

  template <class L, class R>
  void check(int n, std::map<std::string, std::string> params, const L& lhs, const R& rhs) {
    ++result_.checked;
    if (lhs == rhs) return;
    ++result_.failed;
    if (result_.failures.size() < kMaxRecordedFailures) {
      result_.failures.push_back({n, std::move(params), render(lhs), render(rhs)});
    }
  }

  IdentityFamilyResult take() { return std::move(result_); }

 private:
  static std::string render(const HeckeElement& x) { return x.to_string(); }
  static std::string render(const SignedPermutation& g) { return g.to_string(); }
  static std::string render(bool b) { return b ? "true" : "false"; }

  IdentityFamilyResult result_;
};

std::string str(int v) { return std::to_string(v); }

HeckeElement xi_for(const HeckeContextPtr& ctx, int p, int t, int r, bool perturb) {
  if (!perturb) return xi_elem(ctx, p, t, r);
  CoxWord w = xi_word(ctx->n, p, t, r);
  if (!w.letters.empty()) w.letters.pop_back();
  return word_product(ctx, w);
}

std::vector<GeneratorSymbol> generators_of(int n) { return ParabolicSpec::type_b(n).generators(); }

}  // namespace

bool IdentityReport::all_passed() const {
  for (const auto& f : families) {
    if (f.failed != 0) return false;
  }
  return true;
}

std::size_t IdentityReport::total_checked() const {
  std::size_t total = 0;
  for (const auto& f : families) total += f.checked;
  return total;
}

IdentityReport run_identity_suites(int n_max, const ScalarConfig& scalars, const IdentityOptions& opts) {
  if (n_max < 1 || n_max > kMaxRank) throw RankError("identity suites need 1 <= n <= " + std::to_string(kMaxRank));
  FamilyRecorder quadratic("quadratic_relation");
  FamilyRecorder braid("braid_relations");
  FamilyRecorder matsumoto("reduced_word_independence");
  FamilyRecorder conj("u_n_conjugation");
  FamilyRecorder umtab("u_m_times_t_ab");
  FamilyRecorder tkv("t_k_past_v");
  FamilyRecorder xi("xi_intertwining");
  FamilyRecorder xi_inv("xi_inverse");

  for (int n = 1; n <= n_max; ++n) {
    auto ctx = HeckeContext::make(n, scalars);
    const auto one = one_elem(ctx);
    const Scalar q = scalars.q;

    for (auto s : generators_of(n)) {
      const auto ts = gen(ctx, s);
      quadratic.check(n, {{"s", s.to_string()}}, mul(ts, ts), q * one + (q - scalars.one()) * ts);
    }

    const auto gens = generators_of(n);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        const int m = coxeter_order(gens[a], gens[b]);
        HeckeElement lhs = one, rhs = one;
        for (int k = 0; k < m; ++k) {
          lhs = mul_gen(lhs, k % 2 == 0 ? gens[a] : gens[b], Side::Right);
          rhs = mul_gen(rhs, k % 2 == 0 ? gens[b] : gens[a], Side::Right);
        }
        braid.check(n, {{"s", gens[a].to_string()}, {"t", gens[b].to_string()}, {"m", str(m)}}, lhs, rhs);
      }
    }

    for (const auto& w : all_elements(n)) {
      const auto expected = t_of(ctx, w);
      matsumoto.check(n, {{"w", w.to_string()}, {"word", "canonical"}}, word_product(ctx, reduced_word(w)), expected);
      for (std::uint64_t k = 0; k < 2; ++k) {
        const CoxWord word = random_reduced_word(w, opts.seed + k * 7919 + static_cast<std::uint64_t>(n));
        matsumoto.check(n, {{"w", w.to_string()}, {"word", word.to_string()}}, word_product(ctx, word), expected);
      }
    }

    if (n >= 2) {
      const auto un = u_m_elem(n, n);
      for (int i = 2; i <= n - 1; ++i) {
        conj.check(n, {{"i", str(i)}}, conjugate(SignedPermutation::generator(GeneratorSymbol::s(i), n), un),
                   SignedPermutation::generator(GeneratorSymbol::s(i - 1), n));
      }
      const auto c1 = conjugate(SignedPermutation::generator(GeneratorSymbol::s(1), n), un);
      bool is_generator = false;
      for (auto s : ParabolicSpec::type_b(n - 1).generators()) {
        if (SignedPermutation::generator(s, n) == c1) is_generator = true;
      }
      conj.check(n, {{"i", "1"}, {"image", c1.to_string()}}, is_generator, false);
    }

    for (int m = 1; m <= n; ++m) {
      const auto um = u_m(ctx, m);
      for (int b = 1; b <= m; ++b) {
        for (int a = b; a <= n; ++a) {
          std::map<std::string, std::string> params{{"m", str(m)}, {"a", str(a)}, {"b", str(b)}};
          const auto lhs = mul(um, t_ab(ctx, a, b));
          if (a == b) {
            umtab.check(n, params, lhs, um);
          } else if (m > a) {
            umtab.check(n, params, lhs, mul(t_ab(ctx, a + 1, b + 1), um));
          } else if (a > m) {
            umtab.check(n, params, lhs, mul(t_ab(ctx, a, b + 1), u_m(ctx, m + 1)));
          }
        }
      }
    }

    // k - i + 1 < m_i for every i, which reduces to k < m_t + t - 1. The
    // weaker k < m_1 admits counterexamples such as m = [4,2], k = 3.
    for (const auto& mv : MVector::all_up_to(n)) {
      if (mv.empty()) continue;
      const int t = static_cast<int>(mv.size());
      const int last = mv.entries().back();
      const auto v = v_elem(ctx, mv);
      for (int k = t + 1; k < last + t - 1 && k <= n - 1; ++k) {
        tkv.check(n, {{"m", mv.to_string()}, {"k", str(k)}}, mul(gen(ctx, GeneratorSymbol::s(k)), v),
                  mul(v, gen(ctx, GeneratorSymbol::s(k - t))));
      }
    }

    for (int p = 1; p <= n; ++p) {
      for (int t = 1; t <= p; ++t) {
        for (int r = -1; r <= n - p - 1; ++r) {
          const auto x = xi_elem(ctx, p, t, r);
          const auto xinv = xi_inverse(ctx, p, t, r);
          std::map<std::string, std::string> params{{"p", str(p)}, {"t", str(t)}, {"r", str(r)}};
          xi_inv.check(n, params, mul(xinv, x), one);
          xi_inv.check(n, params, mul(x, xinv), one);
          if (r < 0) continue;
          const auto xi_prev = xi_for(ctx, p, t, r - 1, opts.perturb_xi);
          const auto xi_here = xi_for(ctx, p, t, r, opts.perturb_xi);
          for (int j = 0; j <= r; ++j) {
            auto lhs = mul(t_ab(ctx, n - r + j, n - r - p + t), xi_prev);
            auto rhs = mul(xi_here, t_ab(ctx, n - p - r + j + t, n - r - p + t));
            auto pj = params;
            pj["j"] = str(j);
            xi.check(n, std::move(pj), lhs, rhs);
          }
        }
      }
    }
  }

  IdentityReport report;
  report.n_max = n_max;
  report.scalars = scalars;
  for (auto* f : {&quadratic, &braid, &matsumoto, &conj, &umtab, &tkv, &xi, &xi_inv}) {
    report.families.push_back(f->take());
  }
  return report;
}

}  // namespace hhl
