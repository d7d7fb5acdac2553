#pragma once

// Finite chain complexes with labelled bases: injective-word complexes,
// the Hecke-algebraic complexes built from coset representatives, the
// filtration by leftmost negative letter, and the comparison complexes used
// to identify its quotients.

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hhl/coxeter.hpp"
#include "hhl/hecke.hpp"
#include "hhl/scalar.hpp"
#include "hhl/sparse.hpp"

namespace hhl {

// A (signed) injective word; degree r words have r+1 letters.
struct InjWord {
  std::vector<int> letters;

  std::string to_string() const;  // "(1,-3,2)"
  auto operator<=>(const InjWord&) const = default;
};

// A basis tensor of the normalized bar complex: e_{w_1} | ... | e_{w_k}.
struct BarTuple {
  std::vector<SignedPermutation> factors;

  std::string to_string() const;  // "[2,1]|[-1,2]"
  auto operator<=>(const BarTuple&) const = default;
};

using Label = std::variant<InjWord, SignedPermutation, BarTuple>;
std::string label_to_string(const Label& l);

struct ComplexInfo {
  // "C", "Cpm", "D", "Dpm", "F", "quotient", "block", "M_t", "D_t",
  // "D_t_induced", "bar".
  std::string kind;
  int n = 0;
  Field field = Field::rationals();
  // Unset for complexes that do not depend on q.
  std::optional<Scalar> q;
  // Extra parameters such as p, t, m; rendered into reports.
  std::map<std::string, std::string> params;
};

struct LabeledComplex {
  ComplexInfo info;
  int lo = 0;
  int hi = -1;
  std::vector<std::size_t> dims;                  // dims[r - lo]
  std::vector<std::vector<Label>> bases;          // bases[r - lo]; may be empty for unlabelled complexes
  std::vector<SparseMatrix> boundaries;           // boundaries[r - lo]: degree r -> r-1
  std::vector<std::vector<SparseMatrix>> faces;   // faces[r - lo][j], unscaled; empty if not kept

  bool in_range(int r) const { return r >= lo && r <= hi; }
  std::size_t dim(int r) const { return in_range(r) ? dims[static_cast<std::size_t>(r - lo)] : 0; }
  const std::vector<Label>& basis(int r) const;
  // For r = lo the target is the zero space.
  const SparseMatrix& boundary(int r) const;
  bool has_faces() const { return !faces.empty(); }
  const std::vector<SparseMatrix>& face_maps(int r) const;
  Field field() const { return info.field; }
  bool labelled() const { return !bases.empty(); }
};

// -- injective words -----------------------------------------------------------

// Degrees -1..n-1; faces delete letter j with sign (-1)^j.
LabeledComplex build_C(int n, bool signed_letters, Field field);

// -- coset complexes -----------------------------------------------------------

// A complex whose degree-r basis is the set of right-J_r-reduced elements of a
// group (a list of signed permutations in canonical order), with face maps
// x (x) 1 -> x T_{y(r,j)} (x) 1, j = 0..r, projected onto degree r-1 and
// differential leading * sum_j (-1)^j q^{-j} face_j.
struct CosetComplexSpec {
  ComplexInfo info;
  ScalarConfig scalars;
  int lo = -1;
  int hi = -1;
  std::vector<SignedPermutation> group;
  std::function<ParabolicSpec(int r)> parabolic;
  std::function<SignedPermutation(int r, int j)> face_element;
  std::optional<Scalar> leading;
  bool keep_faces = true;
};

LabeledComplex build_coset_complex(const CosetComplexSpec& spec);

// Type B: basis (X_{B_{n-r-1}})^{-1} in B_n, r = -1..n-1.
// Type A: basis (X_{S_{n-r-1}})^{-1} in S_n.
LabeledComplex build_D(int n, CoxeterType type, const ScalarConfig& scalars, bool keep_faces = true);

// -- filtration ----------------------------------------------------------------

// The negative profile of a D-type label in degree r.
MVector label_profile(const Label& l, int r);

struct FiltrationLevel {
  int p = 0;
  std::vector<std::vector<bool>> member_mask;  // [r - lo][basis index]
};

// Levels p = 0..n over a D^{\pm}(n) complex: a label is in F_p iff its
// profile's leading entry is at most p.
std::vector<FiltrationLevel> filtration(const LabeledComplex& dpm);

// Restriction to the chosen basis indices per degree (faces included).
LabeledComplex restrict_complex(const LabeledComplex& c, const std::vector<std::vector<std::size_t>>& keep,
                                ComplexInfo info);

LabeledComplex filtration_subcomplex(const LabeledComplex& dpm, int p);
// F_p / F_{p-1}, realised on the labels whose profile starts with p.
LabeledComplex quotient_complex(const LabeledComplex& dpm, int p);

struct QuotientBlock {
  MVector m;
  LabeledComplex sub;
  std::vector<std::vector<std::size_t>> positions;  // indices into the quotient basis, per degree
};

// One block per m with m_1 = p, ordered as MVector::all_up_to.
std::vector<QuotientBlock> block_decompose(const LabeledComplex& quotient, int p);

// -- comparison complexes ------------------------------------------------------

// Generators s_{1+t}, ..., s_{n-r-p-2+t} of the parabolic used in degree r.
ParabolicSpec m_t_parabolic(int n, int p, int t, int r);

// Degrees -1..n-p-1 over S_n; face j multiplies by T_{n-r+j, n-p-r+t}.
// With `leading_factor` the differential carries (-1)^p q^{-p}.
LabeledComplex build_M_t(int n, int p, int t, const ScalarConfig& scalars, bool leading_factor = true);

// The reindexed D(n-p): face j multiplies by T_{n-p-r+j+t, n-p-r+t}.
// induced = true works in H_n (same bases as M^t); otherwise only inside the
// parabolic generated by s_{1+t}, ..., s_{n-p-1+t}.
LabeledComplex build_D_t(int n, int p, int t, const ScalarConfig& scalars, bool induced = true);

// A degree-wise linear map between complexes: components[r - lo] sends
// source degree r to target degree r + shift.
struct ChainMap {
  int lo = 0;
  int hi = -1;
  int shift = 0;
  std::vector<SparseMatrix> components;

  const SparseMatrix& at(int r) const { return components.at(static_cast<std::size_t>(r - lo)); }
};

// d_target o f == f o d_source in every degree. On failure `where` names the
// first offending source degree.
bool is_chain_map(const LabeledComplex& source, const LabeledComplex& target, const ChainMap& f,
                  std::string* where = nullptr);

// Phi: Sigma^p M^t -> M_m, x (x) 1 -> T_x V(m + n - 1 - (p+r)) (x) 1.
// Throws IntegrityError if an image leaves the block.
ChainMap phi_map(const LabeledComplex& m_t, const QuotientBlock& block, int n, int p,
                 const ScalarConfig& scalars);

// Psi_r: x (x) 1 -> x xi(r) (x) 1 on the bases of M^t (inverse: xi(r)^{-1}).
ChainMap psi_map(const LabeledComplex& m_t, int n, int p, int t, const ScalarConfig& scalars,
                 bool inverse = false, bool perturb_xi = false);

// The signed injective word (w(n-r), ..., w(n)) of a D-type label.
InjWord tail_label(const SignedPermutation& w, int r);

// Index of each label, per degree (labels must be unique in a degree).
std::vector<std::map<Label, std::size_t>> label_index(const LabeledComplex& c);

}  // namespace hhl
