#include "hhl/structure_checks.hpp"

#include <algorithm>
#include <map>

#include "hhl/errors.hpp"
#include "hhl/homology.hpp"
#include "hhl/linalg.hpp"

namespace hhl {
namespace {

std::size_t factorial(int k) {
  std::size_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

std::size_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
  return r;
}

std::string at(int p, int r) { return "p=" + std::to_string(p) + " r=" + std::to_string(r); }

class Check {
 public:
  explicit Check(std::string name) { res_.name = std::move(name); }

  void expect(bool ok, const std::string& where) {
    ++res_.checked;
    if (ok || !res_.passed) return;
    res_.passed = false;
    res_.detail = where;
  }

  void fail(const std::string& where) { expect(false, where); }

  CheckResult done() && { return std::move(res_); }

 private:
  CheckResult res_;
};

// Every nonzero entry in a column whose label is in `from` sits in a row in `to`.
bool maps_into(const SparseMatrix& m, const std::vector<bool>& from, const std::vector<bool>& to) {
  return std::all_of(m.entries().begin(), m.entries().end(),
                     [&](const SparseEntry& e) { return !from[e.col] || to[e.row]; });
}

std::map<int, std::size_t> betti_of(const LabeledComplex& c) { return homology_dims(c).betti; }

std::size_t lookup(const std::map<int, std::size_t>& m, int r) {
  auto it = m.find(r);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult word_model_check(const LabeledComplex& d, const LabeledComplex& words, std::string name) {
  Check check(std::move(name));
  if (d.lo != words.lo || d.hi != words.hi) {
    check.fail("degree ranges differ");
    return std::move(check).done();
  }
  const auto index = label_index(words);
  std::vector<std::vector<std::size_t>> image;
  for (int r = d.lo; r <= d.hi; ++r) {
    std::vector<std::size_t> ids;
    const auto& idx = index[static_cast<std::size_t>(r - words.lo)];
    for (const auto& l : d.basis(r)) {
      auto it = idx.find(Label(tail_label(std::get<SignedPermutation>(l), r)));
      if (it == idx.end()) {
        check.fail("label " + label_to_string(l) + " has no word in degree " + std::to_string(r));
        return std::move(check).done();
      }
      ids.push_back(it->second);
    }
    image.push_back(std::move(ids));
  }
  static const std::vector<std::size_t> kNone;
  for (int r = d.lo; r <= d.hi; ++r) {
    const auto& cols = image[static_cast<std::size_t>(r - d.lo)];
    const auto& rows = r > d.lo ? image[static_cast<std::size_t>(r - 1 - d.lo)] : kNone;
    check.expect(words.boundary(r).select(rows, cols) == d.boundary(r), "boundary in degree " + std::to_string(r));
  }
  return std::move(check).done();
}

StructureReport run_structure_checks(int n, const ScalarConfig& scalars, const StructureOptions& opts) {
  if (n < 1 || n > kMaxRank) throw RankError("structure checks need 1 <= n <= " + std::to_string(kMaxRank));
  StructureReport rep;
  rep.n = n;
  rep.scalars = scalars;

  const LabeledComplex dpm = build_D(n, CoxeterType::B, scalars, true);
  const auto levels = filtration(dpm);
  const auto deg = [&](int r) { return static_cast<std::size_t>(r - dpm.lo); };

  {
    Check nest("filtration_nesting");
    for (int p = 1; p <= n; ++p) {
      for (int r = dpm.lo; r <= dpm.hi; ++r) {
        const auto& lo_mask = levels[static_cast<std::size_t>(p - 1)].member_mask[deg(r)];
        const auto& hi_mask = levels[static_cast<std::size_t>(p)].member_mask[deg(r)];
        bool ok = true;
        for (std::size_t i = 0; i < lo_mask.size(); ++i) ok = ok && (!lo_mask[i] || hi_mask[i]);
        nest.expect(ok, at(p, r));
      }
    }
    for (int r = dpm.lo; r <= dpm.hi; ++r) {
      const auto& top = levels.back().member_mask[deg(r)];
      nest.expect(std::all_of(top.begin(), top.end(), [](bool b) { return b; }), "F_n misses labels at r=" + std::to_string(r));
    }
    rep.checks.push_back(std::move(nest).done());
  }

  {
    Check closure("subcomplex_closure");
    Check drop("low_faces_drop_level");
    for (int p = 0; p <= n; ++p) {
      const auto& mask = levels[static_cast<std::size_t>(p)].member_mask;
      for (int r = dpm.lo + 1; r <= dpm.hi; ++r) {
        closure.expect(maps_into(dpm.boundary(r), mask[deg(r)], mask[deg(r - 1)]), at(p, r));
        if (p == 0) continue;
        const auto& below = levels[static_cast<std::size_t>(p - 1)].member_mask[deg(r - 1)];
        const auto& faces = dpm.face_maps(r);
        for (int j = 0; j < p && j < static_cast<int>(faces.size()); ++j) {
          drop.expect(maps_into(faces[static_cast<std::size_t>(j)], mask[deg(r)], below),
                      at(p, r) + " j=" + std::to_string(j));
        }
      }
    }
    rep.checks.push_back(std::move(closure).done());
    rep.checks.push_back(std::move(drop).done());
  }

  {
    Check f0("f0_matches_type_a");
    const auto sub = filtration_subcomplex(dpm, 0);
    const auto da = build_D(n, CoxeterType::A, scalars, false);
    for (int r = dpm.lo; r <= dpm.hi; ++r) {
      f0.expect(sub.basis(r) == da.basis(r), "basis at r=" + std::to_string(r));
      f0.expect(sub.boundary(r) == da.boundary(r), "boundary at r=" + std::to_string(r));
    }
    rep.checks.push_back(std::move(f0).done());
  }

  Check qdims("quotient_dims");
  Check qsq("quotient_boundary_squares_zero");
  Check blocks("block_count");
  Check binom("binomial_refinement");
  Check diag("block_diagonal");
  Check mdims("m_t_dims");
  Check phi_bij("phi_bijective");
  Check phi_chain("phi_chain_map");
  Check psi_chain("psi_chain_map");
  Check psi_inv("psi_inverse");
  Check betti_q("betti_quotient_decomposition");
  Check betti_b("betti_block_matches_m_t");
  Check betti_m("betti_m_t_free_over_d");
  Check betti_d("betti_d_t_matches_d");
  Check words("quotient_matches_signed_words");
  const bool q_is_one = scalars.q.is_one();
  const LabeledComplex cpm = q_is_one ? build_C(n, true, scalars.field) : LabeledComplex{};

  for (int p = 1; p <= n; ++p) {
    const auto quot = quotient_complex(dpm, p);
    for (int r = quot.lo; r <= quot.hi; ++r) {
      const std::size_t expected =
          r < p - 1 ? 0 : (std::size_t{1} << (p - 1)) * factorial(n) / factorial(n - r - 1);
      rep.quotient_dims.push_back({p, r, quot.dim(r), expected});
      qdims.expect(quot.dim(r) == expected, at(p, r));
    }
    try {
      verify_boundary_squares_zero(quot);
      qsq.expect(true, "");
    } catch (const IntegrityError& e) {
      qsq.fail("p=" + std::to_string(p) + ": " + e.what());
    }
    if (q_is_one) {
      auto w = word_model_check(quot, cpm, "");
      words.expect(w.passed, "p=" + std::to_string(p) + " " + w.detail);
    }

    const auto blks = block_decompose(quot, p);
    blocks.expect(blks.size() == (std::size_t{1} << (p - 1)), "p=" + std::to_string(p));
    for (int t = 1; t <= p; ++t) {
      const auto count = std::count_if(blks.begin(), blks.end(),
                                       [t](const QuotientBlock& b) { return static_cast<int>(b.m.size()) == t; });
      binom.expect(static_cast<std::size_t>(count) == binomial(p - 1, t - 1), "p=" + std::to_string(p) + " t=" + std::to_string(t));
    }
    for (int r = quot.lo; r <= quot.hi; ++r) {
      std::size_t dims = 0, nnz = 0;
      for (const auto& b : blks) {
        dims += b.sub.dim(r);
        nnz += b.sub.boundary(r).nnz();
      }
      diag.expect(dims == quot.dim(r) && nnz == quot.boundary(r).nnz(), at(p, r));
    }

    const auto bq = betti_of(quot);
    std::map<int, std::map<int, std::size_t>> betti_mt;
    std::map<int, std::size_t> betti_dnp;
    if (n - p >= 1) {
      betti_dnp = betti_of(build_D(n - p, CoxeterType::A, scalars, false));
    } else {
      betti_dnp[-1] = 1;
    }

    for (int t = 1; t <= p; ++t) {
      const std::string pt = "p=" + std::to_string(p) + " t=" + std::to_string(t);
      const auto mt = build_M_t(n, p, t, scalars, true);
      for (int r = mt.lo; r <= mt.hi; ++r) {
        mdims.expect(mt.dim(r) == factorial(n) / factorial(n - r - p - 1), pt + " r=" + std::to_string(r));
      }

      const auto mt_plain = build_M_t(n, p, t, scalars, false);
      const auto dt = build_D_t(n, p, t, scalars, true);
      const auto psi = psi_map(mt_plain, n, p, t, scalars, false, opts.perturb_xi);
      const auto psi_back = psi_map(mt_plain, n, p, t, scalars, true, false);
      std::string where;
      psi_chain.expect(is_chain_map(mt_plain, dt, psi, &where), pt + " " + where);
      for (int r = mt.lo; r <= mt.hi; ++r) {
        psi_inv.expect(psi_back.at(r) * psi.at(r) == SparseMatrix::identity(mt.dim(r), scalars.field),
                       pt + " r=" + std::to_string(r));
      }

      const auto bm = betti_of(mt);
      betti_mt[t] = bm;
      const std::size_t index = factorial(n) / factorial(n - p);
      for (int r = mt.lo; r <= mt.hi; ++r) {
        betti_m.expect(lookup(bm, r) == index * lookup(betti_dnp, r), pt + " r=" + std::to_string(r));
      }
      const auto bdt = betti_of(build_D_t(n, p, t, scalars, false));
      for (int r = mt.lo; r <= mt.hi; ++r) {
        betti_d.expect(lookup(bdt, r) == lookup(betti_dnp, r), pt + " r=" + std::to_string(r));
      }

      for (const auto& b : blks) {
        if (static_cast<int>(b.m.size()) != t) continue;
        const std::string pm = "p=" + std::to_string(p) + " m=" + b.m.to_string();
        try {
          const auto phi = phi_map(mt, b, n, p, scalars);
          bool bijective = true;
          for (int r = mt.lo; r <= mt.hi; ++r) {
            const auto& f = phi.at(r);
            bijective = bijective && f.rows() == f.cols() && rank(f).rank == f.cols();
          }
          phi_bij.expect(bijective, pm);
          std::string w;
          phi_chain.expect(is_chain_map(mt, b.sub, phi, &w), pm + " " + w);
        } catch (const IntegrityError& e) {
          phi_bij.fail(pm + ": " + e.what());
          phi_chain.fail(pm + ": " + e.what());
        }
        const auto bb = betti_of(b.sub);
        for (int r = mt.lo; r <= mt.hi; ++r) {
          betti_b.expect(lookup(bb, p + r) == lookup(bm, r), pm + " r=" + std::to_string(r));
        }
      }
    }

    for (int d = quot.lo; d <= quot.hi; ++d) {
      std::size_t sum = 0;
      for (int t = 1; t <= p; ++t) sum += binomial(p - 1, t - 1) * lookup(betti_mt[t], d - p);
      betti_q.expect(lookup(bq, d) == sum, at(p, d));
    }
  }

  for (auto* c : {&qdims, &qsq, &blocks, &binom, &diag, &mdims, &phi_bij, &phi_chain, &psi_chain, &psi_inv, &betti_q,
                  &betti_b, &betti_m, &betti_d}) {
    rep.checks.push_back(std::move(*c).done());
  }
  if (q_is_one) rep.checks.push_back(std::move(words).done());
  return rep;
}

}  // namespace hhl
