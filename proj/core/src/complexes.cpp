#include "hhl/complexes.hpp"

#include <algorithm>
#include <unordered_map>

#include "hhl/errors.hpp"

namespace hhl {
namespace {

std::size_t at_degree(const LabeledComplex& c, int r) { return static_cast<std::size_t>(r - c.lo); }

void gen_words(int n, bool signed_letters, std::size_t len, std::vector<int>& cur, std::vector<bool>& used,
               std::vector<InjWord>& out) {
  if (cur.size() == len) {
    out.push_back(InjWord{cur});
    return;
  }
  for (int a = 1; a <= n; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    used[static_cast<std::size_t>(a)] = true;
    for (int sign : {1, -1}) {
      if (sign < 0 && !signed_letters) continue;
      cur.push_back(sign * a);
      gen_words(n, signed_letters, len, cur, used, out);
      cur.pop_back();
    }
    used[static_cast<std::size_t>(a)] = false;
  }
}

void require_mt_indices(int n, int p, int t) {
  if (t < 1 || p < t || p > n) {
    throw RankError("need 1 <= t <= p <= n; got n=" + std::to_string(n) + " p=" + std::to_string(p) +
                    " t=" + std::to_string(t));
  }
}

}  // namespace

std::string InjWord::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? "," : "") + std::to_string(letters[i]);
  return s + ")";
}

std::string BarTuple::to_string() const {
  if (factors.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "|" : "") + factors[i].to_string();
  return s;
}

std::string label_to_string(const Label& l) {
  return std::visit([](const auto& x) { return x.to_string(); }, l);
}

const std::vector<Label>& LabeledComplex::basis(int r) const {
  if (!labelled()) throw std::logic_error("complex carries no basis labels");
  return bases.at(static_cast<std::size_t>(r - lo));
}

const SparseMatrix& LabeledComplex::boundary(int r) const {
  if (!in_range(r)) throw RankError("degree " + std::to_string(r) + " outside the complex");
  return boundaries[static_cast<std::size_t>(r - lo)];
}

const std::vector<SparseMatrix>& LabeledComplex::face_maps(int r) const {
  if (!has_faces()) throw std::logic_error("complex was built without face maps");
  return faces.at(static_cast<std::size_t>(r - lo));
}

LabeledComplex build_C(int n, bool signed_letters, Field field) {
  if (n < 0 || n > kMaxRank) throw RankError("C(n) needs 0 <= n <= " + std::to_string(kMaxRank));
  LabeledComplex c;
  c.info.kind = signed_letters ? "Cpm" : "C";
  c.info.n = n;
  c.info.field = field;
  c.lo = -1;
  c.hi = n - 1;
  std::vector<std::map<InjWord, std::size_t>> index;
  for (int r = c.lo; r <= c.hi; ++r) {
    std::vector<InjWord> words;
    std::vector<int> cur;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    gen_words(n, signed_letters, static_cast<std::size_t>(r + 1), cur, used, words);
    std::sort(words.begin(), words.end());
    std::map<InjWord, std::size_t> idx;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < words.size(); ++i) {
      idx.emplace(words[i], i);
      labels.emplace_back(words[i]);
    }
    c.dims.push_back(words.size());
    c.bases.push_back(std::move(labels));
    index.push_back(std::move(idx));
  }
  const Scalar one = Scalar::one(field);
  for (int r = c.lo; r <= c.hi; ++r) {
    const std::size_t cols = c.dim(r);
    const std::size_t rows = c.dim(r - 1);
    std::vector<SparseMatrix> faces;
    SparseBuilder total(rows, cols, field);
    if (r > c.lo) {
      const auto& below = index[at_degree(c, r - 1)];
      for (int j = 0; j <= r; ++j) {
        SparseBuilder face(rows, cols, field);
        const Scalar sign = (j % 2 == 0) ? one : -one;
        for (std::size_t col = 0; col < cols; ++col) {
          InjWord w = std::get<InjWord>(c.bases[at_degree(c, r)][col]);
          w.letters.erase(w.letters.begin() + j);
          const std::size_t row = below.at(w);
          face.add(row, col, one);
          total.add(row, col, sign);
        }
        faces.push_back(std::move(face).finish());
      }
    }
    c.boundaries.push_back(std::move(total).finish());
    c.faces.push_back(std::move(faces));
  }
  return c;
}

LabeledComplex build_coset_complex(const CosetComplexSpec& spec) {
  LabeledComplex c;
  c.info = spec.info;
  c.info.field = spec.scalars.field;
  c.info.q = spec.scalars.q;
  c.lo = spec.lo;
  c.hi = spec.hi;
  const int n = c.info.n;
  auto ctx = HeckeContext::make(n, spec.scalars);
  std::vector<std::unordered_map<SignedPermutation, std::size_t>> index;
  for (int r = c.lo; r <= c.hi; ++r) {
    auto reps = coset_reps(spec.parabolic(r), CosetKind::ParabolicOnRight, spec.group);
    std::unordered_map<SignedPermutation, std::size_t> idx;
    std::vector<Label> labels;
    labels.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      idx.emplace(reps[i], i);
      labels.emplace_back(reps[i]);
    }
    c.dims.push_back(reps.size());
    c.bases.push_back(std::move(labels));
    index.push_back(std::move(idx));
  }
  const auto& cfg = spec.scalars;
  const Scalar leading = spec.leading.value_or(cfg.one());
  for (int r = c.lo; r <= c.hi; ++r) {
    const std::size_t cols = c.dim(r);
    const std::size_t rows = c.dim(r - 1);
    SparseBuilder total(rows, cols, cfg.field);
    std::vector<SparseMatrix> faces;
    if (r > c.lo) {
      const auto& below = index[at_degree(c, r - 1)];
      const ParabolicSpec target = spec.parabolic(r - 1);
      for (int j = 0; j <= r; ++j) {
        const CoxWord word = reduced_word(spec.face_element(r, j));
        Scalar coeff = leading * cfg.q_pow(-j);
        if (j % 2 == 1) coeff = -coeff;
        SparseBuilder face(rows, cols, cfg.field);
        for (std::size_t col = 0; col < cols; ++col) {
          HeckeElement e = t_of(ctx, std::get<SignedPermutation>(c.bases[at_degree(c, r)][col]));
          for (auto s : word.letters) e = mul_gen(e, s, Side::Right);
          const HeckeElement projected = project_right(e, target);
          for (const auto& [y, v] : projected.terms()) {
            auto it = below.find(y);
            if (it == below.end()) {
              throw IntegrityError("face image " + y.to_string() + " is not a basis label in degree " +
                                   std::to_string(r - 1));
            }
            face.add(it->second, col, v);
            total.add(it->second, col, coeff * v);
          }
        }
        if (spec.keep_faces) faces.push_back(std::move(face).finish());
      }
    }
    c.boundaries.push_back(std::move(total).finish());
    if (spec.keep_faces) c.faces.push_back(std::move(faces));
  }
  return c;
}

LabeledComplex build_D(int n, CoxeterType type, const ScalarConfig& scalars, bool keep_faces) {
  if (n < 1 || n > kMaxRank) throw RankError("D(n) needs 1 <= n <= " + std::to_string(kMaxRank));
  CosetComplexSpec spec;
  spec.info.kind = type == CoxeterType::B ? "Dpm" : "D";
  spec.info.n = n;
  spec.scalars = scalars;
  spec.lo = -1;
  spec.hi = n - 1;
  spec.group = all_elements(n, type);
  spec.parabolic = [n, type](int r) {
    return type == CoxeterType::B ? ParabolicSpec::type_b(n - r - 1) : ParabolicSpec::type_a(n - r - 1);
  };
  spec.face_element = [n](int r, int j) { return s_ab(n - r + j, n - r, n); };
  spec.keep_faces = keep_faces;
  return build_coset_complex(spec);
}

MVector label_profile(const Label& l, int r) {
  return negative_profile(std::get<SignedPermutation>(l), r);
}

std::vector<FiltrationLevel> filtration(const LabeledComplex& dpm) {
  std::vector<FiltrationLevel> out;
  for (int p = 0; p <= dpm.info.n; ++p) {
    FiltrationLevel level;
    level.p = p;
    for (int r = dpm.lo; r <= dpm.hi; ++r) {
      std::vector<bool> mask;
      for (const auto& l : dpm.basis(r)) mask.push_back(label_profile(l, r).leading() <= p);
      level.member_mask.push_back(std::move(mask));
    }
    out.push_back(std::move(level));
  }
  return out;
}

LabeledComplex restrict_complex(const LabeledComplex& c, const std::vector<std::vector<std::size_t>>& keep,
                                ComplexInfo info) {
  LabeledComplex out;
  out.info = std::move(info);
  out.lo = c.lo;
  out.hi = c.hi;
  static const std::vector<std::size_t> kNone;
  auto kept = [&](int r) -> const std::vector<std::size_t>& {
    return c.in_range(r) ? keep.at(at_degree(c, r)) : kNone;
  };
  for (int r = c.lo; r <= c.hi; ++r) {
    const auto& k = kept(r);
    out.dims.push_back(k.size());
    if (c.labelled()) {
      std::vector<Label> labels;
      for (auto i : k) labels.push_back(c.basis(r)[i]);
      out.bases.push_back(std::move(labels));
    }
    out.boundaries.push_back(c.boundary(r).select(kept(r - 1), k));
    if (c.has_faces()) {
      std::vector<SparseMatrix> faces;
      for (const auto& f : c.face_maps(r)) faces.push_back(f.select(kept(r - 1), k));
      out.faces.push_back(std::move(faces));
    }
  }
  return out;
}

namespace {

LabeledComplex restrict_by_leading(const LabeledComplex& dpm, int p, bool exact, const std::string& kind) {
  std::vector<std::vector<std::size_t>> keep;
  for (int r = dpm.lo; r <= dpm.hi; ++r) {
    std::vector<std::size_t> k;
    const auto& basis = dpm.basis(r);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const int lead = label_profile(basis[i], r).leading();
      if (exact ? lead == p : lead <= p) k.push_back(i);
    }
    keep.push_back(std::move(k));
  }
  ComplexInfo info = dpm.info;
  info.kind = kind;
  info.params["p"] = std::to_string(p);
  return restrict_complex(dpm, keep, std::move(info));
}

}  // namespace

LabeledComplex filtration_subcomplex(const LabeledComplex& dpm, int p) {
  return restrict_by_leading(dpm, p, false, "F");
}

LabeledComplex quotient_complex(const LabeledComplex& dpm, int p) {
  if (p < 1 || p > dpm.info.n) throw RankError("quotient level p must lie in 1..n");
  return restrict_by_leading(dpm, p, true, "quotient");
}

std::vector<QuotientBlock> block_decompose(const LabeledComplex& quotient, int p) {
  std::vector<QuotientBlock> out;
  for (const auto& m : MVector::all_up_to(p)) {
    if (m.leading() != p) continue;
    QuotientBlock b;
    b.m = m;
    for (int r = quotient.lo; r <= quotient.hi; ++r) {
      std::vector<std::size_t> k;
      const auto& basis = quotient.basis(r);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (label_profile(basis[i], r) == m) k.push_back(i);
      }
      b.positions.push_back(std::move(k));
    }
    ComplexInfo info = quotient.info;
    info.kind = "block";
    info.params["m"] = m.to_string();
    b.sub = restrict_complex(quotient, b.positions, std::move(info));
    out.push_back(std::move(b));
  }
  return out;
}

ParabolicSpec m_t_parabolic(int n, int p, int t, int r) { return ParabolicSpec::shifted_a(n - r - p - 1, t); }

LabeledComplex build_M_t(int n, int p, int t, const ScalarConfig& scalars, bool leading_factor) {
  require_mt_indices(n, p, t);
  CosetComplexSpec spec;
  spec.info.kind = "M_t";
  spec.info.n = n;
  spec.info.params = {{"p", std::to_string(p)}, {"t", std::to_string(t)},
                      {"leading_factor", leading_factor ? "true" : "false"}};
  spec.scalars = scalars;
  spec.lo = -1;
  spec.hi = n - p - 1;
  spec.group = all_elements(n, CoxeterType::A);
  spec.parabolic = [n, p, t](int r) { return m_t_parabolic(n, p, t, r); };
  spec.face_element = [n, p, t](int r, int j) { return s_ab(n - r + j, n - p - r + t, n); };
  if (leading_factor) {
    Scalar f = scalars.q_pow(-p);
    spec.leading = (p % 2 == 0) ? f : -f;
  }
  return build_coset_complex(spec);
}

LabeledComplex build_D_t(int n, int p, int t, const ScalarConfig& scalars, bool induced) {
  require_mt_indices(n, p, t);
  CosetComplexSpec spec;
  spec.info.kind = induced ? "D_t_induced" : "D_t";
  spec.info.n = n;
  spec.info.params = {{"p", std::to_string(p)}, {"t", std::to_string(t)}};
  spec.scalars = scalars;
  spec.lo = -1;
  spec.hi = n - p - 1;
  auto group = all_elements(n, CoxeterType::A);
  if (!induced) {
    const auto sub = ParabolicSpec::shifted_a(n - p, t);
    std::erase_if(group, [&](const SignedPermutation& g) { return !in_parabolic(g, sub); });
  }
  spec.group = std::move(group);
  spec.parabolic = [n, p, t](int r) { return m_t_parabolic(n, p, t, r); };
  spec.face_element = [n, p, t](int r, int j) { return s_ab(n - p - r + j + t, n - p - r + t, n); };
  return build_coset_complex(spec);
}

bool is_chain_map(const LabeledComplex& source, const LabeledComplex& target, const ChainMap& f,
                  std::string* where) {
  const Field field = source.field();
  for (int r = f.lo; r <= f.hi; ++r) {
    const int tr = r + f.shift;
    const SparseMatrix& fr = f.at(r);
    SparseMatrix lhs(target.dim(tr - 1), source.dim(r), field);
    if (target.in_range(tr) && target.dim(tr - 1) > 0) lhs = target.boundary(tr) * fr;
    SparseMatrix rhs(target.dim(tr - 1), source.dim(r), field);
    if (r - 1 >= f.lo && source.in_range(r)) rhs = f.at(r - 1) * source.boundary(r);
    if (!(lhs == rhs)) {
      if (where) *where = "degree " + std::to_string(r);
      return false;
    }
  }
  return true;
}

ChainMap phi_map(const LabeledComplex& m_t, const QuotientBlock& block, int n, int p,
                 const ScalarConfig& scalars) {
  auto ctx = HeckeContext::make(n, scalars);
  ChainMap f;
  f.lo = m_t.lo;
  f.hi = m_t.hi;
  f.shift = p;
  auto index = label_index(block.sub);
  for (int r = m_t.lo; r <= m_t.hi; ++r) {
    const int dr = p + r;
    const CoxWord v_word = reduced_word(v_of(block.m.shifted(n - 1 - dr), n));
    const auto target = ParabolicSpec::type_b(n - dr - 1);
    const auto& rows = index.at(at_degree(block.sub, dr));
    SparseBuilder b(block.sub.dim(dr), m_t.dim(r), scalars.field);
    for (std::size_t col = 0; col < m_t.dim(r); ++col) {
      HeckeElement e = t_of(ctx, std::get<SignedPermutation>(m_t.basis(r)[col]));
      for (auto s : v_word.letters) e = mul_gen(e, s, Side::Right);
      const HeckeElement projected = project_right(e, target);
      for (const auto& [y, v] : projected.terms()) {
        auto it = rows.find(Label(y));
        if (it == rows.end()) {
          throw IntegrityError("image " + y.to_string() + " leaves the block " + block.m.to_string());
        }
        b.add(it->second, col, v);
      }
    }
    f.components.push_back(std::move(b).finish());
  }
  return f;
}

ChainMap psi_map(const LabeledComplex& m_t, int n, int p, int t, const ScalarConfig& scalars, bool inverse,
                 bool perturb_xi) {
  auto ctx = HeckeContext::make(n, scalars);
  ChainMap f;
  f.lo = m_t.lo;
  f.hi = m_t.hi;
  auto index = label_index(m_t);
  for (int r = m_t.lo; r <= m_t.hi; ++r) {
    HeckeElement xi(ctx);
    if (perturb_xi) {
      CoxWord w = xi_word(n, p, t, r);
      if (!w.letters.empty()) w.letters.pop_back();
      xi = word_product(ctx, w);
    } else {
      xi = inverse ? xi_inverse(ctx, p, t, r) : xi_elem(ctx, p, t, r);
    }
    const auto target = m_t_parabolic(n, p, t, r);
    const auto& rows = index.at(at_degree(m_t, r));
    SparseBuilder b(m_t.dim(r), m_t.dim(r), scalars.field);
    for (std::size_t col = 0; col < m_t.dim(r); ++col) {
      HeckeElement e = mul(t_of(ctx, std::get<SignedPermutation>(m_t.basis(r)[col])), xi);
      const HeckeElement projected = project_right(e, target);
      for (const auto& [y, v] : projected.terms()) {
        auto it = rows.find(Label(y));
        if (it == rows.end()) throw IntegrityError("image " + y.to_string() + " is not a basis label");
        b.add(it->second, col, v);
      }
    }
    f.components.push_back(std::move(b).finish());
  }
  return f;
}

InjWord tail_label(const SignedPermutation& w, int r) { return InjWord{tail_word(w, r)}; }

std::vector<std::map<Label, std::size_t>> label_index(const LabeledComplex& c) {
  std::vector<std::map<Label, std::size_t>> out;
  for (int r = c.lo; r <= c.hi; ++r) {
    std::map<Label, std::size_t> idx;
    const auto& basis = c.basis(r);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!idx.emplace(basis[i], i).second) {
        throw IntegrityError("duplicate label " + label_to_string(basis[i]) + " in degree " + std::to_string(r));
      }
    }
    out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace hhl
