#pragma once

// Iwahori-Hecke algebras HB_n (and H_n inside it) in the T_w basis, with
// coefficients in a field where q has been specialized to a unit.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hhl/coxeter.hpp"
#include "hhl/scalar.hpp"

namespace hhl {

// Rank and coefficient ring shared by every element of one algebra.
struct HeckeContext {
  int n = 0;
  ScalarConfig scalars;

  static std::shared_ptr<const HeckeContext> make(int n, ScalarConfig scalars);
  bool operator==(const HeckeContext& o) const { return n == o.n && scalars == o.scalars; }
};

using HeckeContextPtr = std::shared_ptr<const HeckeContext>;

class HeckeElement {
 public:
  using Terms = std::map<SignedPermutation, Scalar>;

  explicit HeckeElement(HeckeContextPtr ctx) : ctx_(std::move(ctx)) {}

  const HeckeContextPtr& context() const { return ctx_; }
  int rank() const { return ctx_->n; }
  const ScalarConfig& scalars() const { return ctx_->scalars; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  // Zero when g is outside the support.
  Scalar coefficient(const SignedPermutation& g) const;

  // Adds c * T_g, pruning the term if it cancels.
  void add_term(const SignedPermutation& g, const Scalar& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Scalar& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Scalar& c) { return a *= c; }
  friend HeckeElement operator*(const Scalar& c, HeckeElement a) { return a *= c; }

  // Terms in canonical (length, lex) order, rendered as
  // "c1*T[2,-1] + c2*T[1,2]".
  std::vector<std::pair<SignedPermutation, Scalar>> sorted_terms() const;
  std::string to_string() const;

  // Same context and same terms.
  bool operator==(const HeckeElement& o) const;

 private:
  void require_same_context(const HeckeElement& o) const;

  HeckeContextPtr ctx_;
  Terms terms_;
};

HeckeElement zero_elem(const HeckeContextPtr& ctx);
HeckeElement one_elem(const HeckeContextPtr& ctx);
HeckeElement t_of(const HeckeContextPtr& ctx, const SignedPermutation& g);
HeckeElement gen(const HeckeContextPtr& ctx, GeneratorSymbol s);
// T_{s_1} ... T_{s_k} for any word, reduced or not.
HeckeElement word_product(const HeckeContextPtr& ctx, const CoxWord& w);

// x * T_s (Side::Right) or T_s * x (Side::Left).
HeckeElement mul_gen(const HeckeElement& x, GeneratorSymbol s, Side side);
// Expands each T_w of y along reduced_word(w) and folds mul_gen from the left.
HeckeElement mul(const HeckeElement& x, const HeckeElement& y);

// The action on the trivial module: sum of c_w q^{l(w)}.
Scalar augment(const HeckeElement& x);

// q^{-1} T_s + (q^{-1} - 1) T_1.
HeckeElement gen_inverse(const HeckeContextPtr& ctx, GeneratorSymbol s);

// Named elements.
HeckeElement u_m(const HeckeContextPtr& ctx, int m);
HeckeElement v_elem(const HeckeContextPtr& ctx, const MVector& m);
// T_{a,b} = T_{a-1} T_{a-2} ... T_b.
HeckeElement t_ab(const HeckeContextPtr& ctx, int a, int b);

// The word of xi(r) for parameters (n, p, t): rows k = 1..p-t, row k being
// s_{n-r-k} s_{n-r-k+1} ... s_{n-k}. Empty when p = t or r = -1.
CoxWord xi_word(int n, int p, int t, int r);
HeckeElement xi_elem(const HeckeContextPtr& ctx, int p, int t, int r);
// Product of gen_inverse over the reversed word of xi(r).
HeckeElement xi_inverse(const HeckeContextPtr& ctx, int p, int t, int r);

// Image in H (x) _{H_J} 1: each T_y with y = x' z (x' in X_J^{-1}, z in W_J)
// becomes q^{l(z)} T_{x'}.
HeckeElement project_right(const HeckeElement& x, const ParabolicSpec& J);

}  // namespace hhl
