#pragma once

// Hyperoctahedral groups B_n as signed permutations, their parabolic
// subgroups, and distinguished (double) coset representatives.
//
// Conventions used throughout the library:
//   * generators are u = (-1 1) and s_i = (i i+1), 1 <= i <= n-1;
//   * composition is (g*h)(i) = g(h(i)), so a word x_1 x_2 ... x_k denotes
//     the product x_1 * x_2 * ... * x_k;
//   * the symmetric group S_n (type A_{n-1}) is the sign-free subgroup,
//     generated by s_1, ..., s_{n-1}.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hhl {

inline constexpr int kMaxRank = 8;

enum class CoxeterType : std::uint8_t { A, B };

// Which subgroup sits on which side of the cosets being represented.
//   ParabolicOnLeft:  W_J \ W, represented by X_J (no left descent in J)
//   ParabolicOnRight: W / W_J, represented by X_J^{-1} (no right descent in J)
enum class CosetKind : std::uint8_t { ParabolicOnLeft, ParabolicOnRight };

enum class Side : std::uint8_t { Left, Right };

class GeneratorSymbol {
 public:
  static GeneratorSymbol u() { return GeneratorSymbol(0); }
  static GeneratorSymbol s(int i);
  // "u", "s1", "s12", ...
  static GeneratorSymbol parse(std::string_view token);

  bool is_u() const { return index_ == 0; }
  // 0 for u, i for s_i.
  int index() const { return index_; }
  std::string to_string() const;

  // Valid in the ambient rank n; type A excludes u.
  bool valid_for(int n, CoxeterType type = CoxeterType::B) const;

  auto operator<=>(const GeneratorSymbol&) const = default;

 private:
  explicit GeneratorSymbol(int index) : index_(static_cast<std::int8_t>(index)) {}
  std::int8_t index_;
};

// The order m_{s,t} of st in B_n.
int coxeter_order(GeneratorSymbol s, GeneratorSymbol t);

class SignedPermutation {
 public:
  // The identity of B_0.
  SignedPermutation() = default;

  static SignedPermutation identity(int n);
  // Throws RankError unless |images| is a permutation of 1..n.
  static SignedPermutation from_images(std::span<const int> images);
  static SignedPermutation generator(GeneratorSymbol s, int n);
  // "[2,-1,3]"
  static SignedPermutation parse(std::string_view text);

  int rank() const { return rank_; }
  // Image of a nonzero letter i with |i| <= n; g(-i) = -g(i).
  int operator()(int i) const {
    return i > 0 ? images_[static_cast<std::size_t>(i - 1)]
                 : -images_[static_cast<std::size_t>(-i - 1)];
  }
  std::vector<int> images() const;

  SignedPermutation operator*(const SignedPermutation& h) const;
  SignedPermutation inverse() const;
  // g * s: acts on positions.
  SignedPermutation times_generator(GeneratorSymbol s) const;
  // s * g: acts on values.
  SignedPermutation generator_times(GeneratorSymbol s) const;

  // s is a right descent iff l(g s) < l(g).
  bool has_right_descent(GeneratorSymbol s) const;
  bool has_left_descent(GeneratorSymbol s) const;

  bool is_identity() const;
  bool is_unsigned() const;
  // View inside B_m for m >= rank(), fixing the new letters.
  SignedPermutation embedded(int m) const;

  std::string to_string() const;

  bool operator==(const SignedPermutation& o) const = default;
  // Rank first, then lexicographic on one-line notation.
  std::strong_ordering operator<=>(const SignedPermutation& o) const;

  std::size_t hash() const;

 private:
  std::array<std::int8_t, kMaxRank> images_{};
  std::uint8_t rank_ = 0;
};

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& g) const { return g.hash(); }
};

// Orders by (length, lexicographic one-line notation). This is the basis
// order used for every matrix the library emits.
bool canonical_less(const SignedPermutation& a, const SignedPermutation& b);
void sort_canonical(std::vector<SignedPermutation>& elements);

struct CoxWord {
  std::vector<GeneratorSymbol> letters;
  int rank = 0;

  // Throws RankError if any letter is invalid for rank n.
  static CoxWord make(std::vector<GeneratorSymbol> letters, int n);
  // Space separated tokens, e.g. "u s1 s2".
  static CoxWord parse(std::string_view text, int n);

  std::size_t size() const { return letters.size(); }
  std::string to_string() const;
  bool operator==(const CoxWord&) const = default;
};

/// A subset J of the generating set {u, s_1, ..., s_{n-1}}, stored as a bitmask
/// (bit 0 for u, bit i for s_i).
class ParabolicSpec {
 public:
  ParabolicSpec() = default;
  static ParabolicSpec from_generators(std::span<const GeneratorSymbol> gens);
  // {u, s_1, ..., s_{k-1}}: generators of B_k (empty for k = 0).
  static ParabolicSpec type_b(int k);
  // {s_1, ..., s_{k-1}}: generators of S_k.
  static ParabolicSpec type_a(int k);
  // {s_{1+shift}, ..., s_{k-1+shift}}: S_k reindexed by +shift.
  static ParabolicSpec shifted_a(int k, int shift);
  // All generators of the rank-n group of the given type.
  static ParabolicSpec full(int n, CoxeterType type);

  bool contains(GeneratorSymbol s) const { return (mask_ >> s.index()) & 1u; }
  bool empty() const { return mask_ == 0; }
  std::vector<GeneratorSymbol> generators() const;
  // Every member is a generator of the rank-n group of this type.
  bool valid_for(int n, CoxeterType type = CoxeterType::B) const;
  std::uint32_t mask() const { return mask_; }

  ParabolicSpec operator&(const ParabolicSpec& o) const { return ParabolicSpec(mask_ & o.mask_); }
  bool operator==(const ParabolicSpec&) const = default;
  std::string to_string() const;

 private:
  explicit ParabolicSpec(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Strictly decreasing sequence m_1 > ... > m_t >= 1 indexing the
/// representatives v(m) = u_{m_1} ... u_{m_t}.
class MVector {
 public:
  MVector() = default;
  // Throws RankError unless strictly decreasing with all entries >= 1.
  explicit MVector(std::vector<int> entries);
  // "[3,1]"
  static MVector parse(std::string_view text);
  // Every vector with max entry <= n, ordered by size then lexicographically.
  static std::vector<MVector> all_up_to(int n);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // m_1, or 0 for the empty vector.
  int leading() const { return entries_.empty() ? 0 : entries_.front(); }
  MVector shifted(int k) const;
  std::string to_string() const;

  auto operator<=>(const MVector&) const = default;

 private:
  std::vector<int> entries_;
};

// -- operations --------------------------------------------------------------

SignedPermutation word_to_perm(const CoxWord& w);

// Minimal word length, by greedy stripping of right descents.
int length(const SignedPermutation& g);

// A reduced word; the first right descent in generator order is stripped at
// every step, so the result is deterministic.
CoxWord reduced_word(const SignedPermutation& g);
// A reduced word chosen by stripping a uniformly random right descent.
CoxWord random_reduced_word(const SignedPermutation& g, std::uint64_t seed);

bool is_reduced(const CoxWord& w);

// Generators s (valid for `type`) with l(gs) < l(g) (Right) or l(sg) < l(g) (Left).
std::vector<GeneratorSymbol> descents(const SignedPermutation& g, Side side,
                                      CoxeterType type = CoxeterType::B);

// No left (Side::Left) or right (Side::Right) descent lies in J.
bool is_J_reduced(const SignedPermutation& g, const ParabolicSpec& J, Side side);
// (J, K)-reduced: no left descent in J and no right descent in K.
bool is_JK_reduced(const SignedPermutation& g, const ParabolicSpec& J, const ParabolicSpec& K);

bool in_parabolic(const SignedPermutation& g, const ParabolicSpec& J);

// Every element of B_n (type B) or S_n (type A), in canonical order.
std::vector<SignedPermutation> all_elements(int n, CoxeterType type = CoxeterType::B);

std::vector<SignedPermutation> coset_reps(const ParabolicSpec& J, CosetKind kind, int n,
                                          CoxeterType type = CoxeterType::B);
// Same, filtering a pre-enumerated group (must be in canonical order).
std::vector<SignedPermutation> coset_reps(const ParabolicSpec& J, CosetKind kind,
                                          std::span<const SignedPermutation> group);

// X_JK = X_J intersect X_K^{-1}.
std::vector<SignedPermutation> double_coset_reps(const ParabolicSpec& J, const ParabolicSpec& K,
                                                 int n, CoxeterType type = CoxeterType::B);

struct MackeyBlock {
  SignedPermutation d;
  std::vector<SignedPermutation> block;  // d * X^K_{J^d cap K}
};

// X_J as the disjoint union over d in X_JK of d * X^K_{J^d cap K}, where
// g^d = d^{-1} g d.
std::vector<MackeyBlock> mackey_partition(const ParabolicSpec& J, const ParabolicSpec& K, int n,
                                          CoxeterType type = CoxeterType::B);

struct CosetFactorization {
  SignedPermutation parabolic_part;
  SignedPermutation rep;
};

// ParabolicOnLeft:  g = z * x with z in W_J and x in X_J.
// ParabolicOnRight: g = x * z with x in X_J^{-1} and z in W_J.
// In both cases l(g) = l(z) + l(x).
CosetFactorization coset_factorize(const SignedPermutation& g, const ParabolicSpec& J,
                                   CosetKind kind);

// Like coset_factorize(..., ParabolicOnRight) but only returns the
// representative and l(z). This is the hot path of every boundary map.
std::pair<SignedPermutation, int> right_coset_reduce(SignedPermutation g, const ParabolicSpec& J);

// g^d = d^{-1} g d.
SignedPermutation conjugate(const SignedPermutation& g, const SignedPermutation& d);

// u_m = u s_1 ... s_{m-1} in B_n.
SignedPermutation u_m_elem(int m, int n);
// v(m) = u_{m_1} ... u_{m_t} in B_n.
SignedPermutation v_of(const MVector& m, int n);
// s_{a,b} = s_{a-1} s_{a-2} ... s_b (identity when a = b).
SignedPermutation s_ab(int a, int b, int n);

// Positions (1-indexed from the left) of negative letters in the signed
// injective word (g(n-r), ..., g(n)), as a decreasing vector.
MVector negative_profile(const SignedPermutation& g, int r);

// (g(n-r), ..., g(n)); the signed injective word of g in degree r.
std::vector<int> tail_word(const SignedPermutation& g, int r);

}  // namespace hhl

template <>
struct std::hash<hhl::SignedPermutation> {
  std::size_t operator()(const hhl::SignedPermutation& g) const { return g.hash(); }
};
