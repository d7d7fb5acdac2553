#include "hhl/hecke.hpp"

#include <algorithm>

#include "hhl/errors.hpp"

namespace hhl {

std::shared_ptr<const HeckeContext> HeckeContext::make(int n, ScalarConfig scalars) {
  if (n < 0 || n > kMaxRank) throw RankError("Hecke algebra rank " + std::to_string(n) + " out of range");
  if (scalars.q.is_zero()) throw ConfigError("q must be a unit; got 0");
  auto ctx = std::make_shared<HeckeContext>();
  ctx->n = n;
  ctx->scalars = std::move(scalars);
  return ctx;
}

Scalar HeckeElement::coefficient(const SignedPermutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? ctx_->scalars.zero() : it->second;
}

void HeckeElement::add_term(const SignedPermutation& g, const Scalar& c) {
  if (g.rank() != ctx_->n) throw RankError("term " + g.to_string() + " has the wrong rank");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::require_same_context(const HeckeElement& o) const {
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw ContextError("Hecke elements from different algebras");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_same_context(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_same_context(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<SignedPermutation, Scalar>> HeckeElement::sorted_terms() const {
  std::vector<std::pair<int, std::pair<SignedPermutation, Scalar>>> keyed;
  for (const auto& [g, c] : terms_) keyed.push_back({length(g), {g, c}});
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<SignedPermutation, Scalar>> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : sorted_terms()) {
    if (!first) s += " + ";
    first = false;
    s += c.to_string() + "*T" + g.to_string();
  }
  return s;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return (ctx_ == o.ctx_ || *ctx_ == *o.ctx_) && terms_ == o.terms_;
}

HeckeElement zero_elem(const HeckeContextPtr& ctx) { return HeckeElement(ctx); }

HeckeElement one_elem(const HeckeContextPtr& ctx) {
  return t_of(ctx, SignedPermutation::identity(ctx->n));
}

HeckeElement t_of(const HeckeContextPtr& ctx, const SignedPermutation& g) {
  HeckeElement x(ctx);
  x.add_term(g, ctx->scalars.one());
  return x;
}

HeckeElement gen(const HeckeContextPtr& ctx, GeneratorSymbol s) {
  return t_of(ctx, SignedPermutation::generator(s, ctx->n));
}

HeckeElement word_product(const HeckeContextPtr& ctx, const CoxWord& w) {
  if (w.rank != ctx->n) throw RankError("word rank does not match the algebra");
  HeckeElement x = one_elem(ctx);
  for (auto s : w.letters) x = mul_gen(x, s, Side::Right);
  return x;
}

HeckeElement mul_gen(const HeckeElement& x, GeneratorSymbol s, Side side) {
  const auto& cfg = x.scalars();
  if (!s.valid_for(x.rank())) throw RankError(s.to_string() + " is not a generator of rank " + std::to_string(x.rank()));
  const Scalar q_minus_1 = cfg.q - cfg.one();
  HeckeElement out(x.context());
  for (const auto& [w, c] : x.terms()) {
    const bool descent = side == Side::Right ? w.has_right_descent(s) : w.has_left_descent(s);
    const SignedPermutation ws = side == Side::Right ? w.times_generator(s) : w.generator_times(s);
    if (descent) {
      out.add_term(ws, cfg.q * c);
      out.add_term(w, q_minus_1 * c);
    } else {
      out.add_term(ws, c);
    }
  }
  return out;
}

HeckeElement mul(const HeckeElement& x, const HeckeElement& y) {
  if (x.context() != y.context() && !(*x.context() == *y.context())) {
    throw ContextError("multiplying Hecke elements from different algebras");
  }
  HeckeElement out(x.context());
  for (const auto& [w, c] : y.terms()) {
    HeckeElement acc = x;
    for (auto s : reduced_word(w).letters) acc = mul_gen(acc, s, Side::Right);
    acc *= c;
    out += acc;
  }
  return out;
}

Scalar augment(const HeckeElement& x) {
  const auto& cfg = x.scalars();
  Scalar total = cfg.zero();
  for (const auto& [w, c] : x.terms()) total += c * cfg.q_pow(length(w));
  return total;
}

HeckeElement gen_inverse(const HeckeContextPtr& ctx, GeneratorSymbol s) {
  const auto& cfg = ctx->scalars;
  const Scalar q_inv = cfg.q.inverse();
  HeckeElement x(ctx);
  x.add_term(SignedPermutation::generator(s, ctx->n), q_inv);
  x.add_term(SignedPermutation::identity(ctx->n), q_inv - cfg.one());
  return x;
}

HeckeElement u_m(const HeckeContextPtr& ctx, int m) { return t_of(ctx, u_m_elem(m, ctx->n)); }

HeckeElement v_elem(const HeckeContextPtr& ctx, const MVector& m) {
  return t_of(ctx, v_of(m, ctx->n));
}

HeckeElement t_ab(const HeckeContextPtr& ctx, int a, int b) { return t_of(ctx, s_ab(a, b, ctx->n)); }

CoxWord xi_word(int n, int p, int t, int r) {
  if (t < 0 || p < t || p > n || r < -1) {
    throw RankError("xi(r) needs t <= p <= n and r >= -1; got n=" + std::to_string(n) + " p=" +
                    std::to_string(p) + " t=" + std::to_string(t) + " r=" + std::to_string(r));
  }
  std::vector<GeneratorSymbol> letters;
  for (int k = 1; k <= p - t; ++k) {
    for (int i = n - r - k; i <= n - k; ++i) {
      if (i < 1 || i > n - 1) {
        throw RankError("xi(r) generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
      }
      letters.push_back(GeneratorSymbol::s(i));
    }
  }
  return CoxWord::make(std::move(letters), n);
}

HeckeElement xi_elem(const HeckeContextPtr& ctx, int p, int t, int r) {
  return word_product(ctx, xi_word(ctx->n, p, t, r));
}

HeckeElement xi_inverse(const HeckeContextPtr& ctx, int p, int t, int r) {
  auto w = xi_word(ctx->n, p, t, r);
  HeckeElement x = one_elem(ctx);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = mul(x, gen_inverse(ctx, *it));
  return x;
}

HeckeElement project_right(const HeckeElement& x, const ParabolicSpec& J) {
  const auto& cfg = x.scalars();
  HeckeElement out(x.context());
  for (const auto& [y, c] : x.terms()) {
    auto [rep, lz] = right_coset_reduce(y, J);
    out.add_term(rep, c * cfg.q_pow(lz));
  }
  return out;
}

}  // namespace hhl
