#include "hhl/linalg.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hhl/errors.hpp"

namespace hhl {
namespace {

template <class V>
using Line = std::vector<std::pair<std::uint32_t, V>>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

struct ModOps {
  using Value = std::uint32_t;
  std::uint32_t p;

  // M -= (M[c] / L[c]) * L. Columns new to M are appended to `fresh`.
  void combine(Line<Value>& m, const Line<Value>& l, std::size_t mpos, std::size_t lpos,
               std::vector<std::uint32_t>& fresh, Line<Value>& scratch) const {
    const std::uint64_t factor = std::uint64_t{m[mpos].second} * inv_mod(l[lpos].second, p) % p;
    const std::uint64_t neg = (p - factor) % p;
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < m.size() || j < l.size()) {
      if (j == l.size() || (i < m.size() && m[i].first < l[j].first)) {
        scratch.push_back(m[i++]);
      } else if (i == m.size() || l[j].first < m[i].first) {
        fresh.push_back(l[j].first);
        scratch.emplace_back(l[j].first, static_cast<std::uint32_t>(neg * l[j].second % p));
        ++j;
      } else {
        auto v = static_cast<std::uint32_t>((m[i].second + neg * l[j].second) % p);
        if (v != 0) scratch.emplace_back(m[i].first, v);
        ++i;
        ++j;
      }
    }
    m.swap(scratch);
  }

  std::size_t weight(const Value&) const { return 0; }
};

struct IntOps {
  using Value = mpz_class;

  // M = (L[c]/g) M - (M[c]/g) L, then M /= content(M).
  void combine(Line<Value>& m, const Line<Value>& l, std::size_t mpos, std::size_t lpos,
               std::vector<std::uint32_t>& fresh, Line<Value>& scratch) const {
    mpz_class g = gcd(m[mpos].second, l[lpos].second);
    mpz_class a = l[lpos].second / g;
    mpz_class b = m[mpos].second / g;
    scratch.clear();
    std::size_t i = 0, j = 0;
    mpz_class v;
    while (i < m.size() || j < l.size()) {
      if (j == l.size() || (i < m.size() && m[i].first < l[j].first)) {
        v = a * m[i].second;
        scratch.emplace_back(m[i].first, v);
        ++i;
      } else if (i == m.size() || l[j].first < m[i].first) {
        fresh.push_back(l[j].first);
        v = -b * l[j].second;
        scratch.emplace_back(l[j].first, v);
        ++j;
      } else {
        v = a * m[i].second - b * l[j].second;
        if (sgn(v) != 0) scratch.emplace_back(m[i].first, v);
        ++i;
        ++j;
      }
    }
    mpz_class content = 0;
    for (const auto& [c, x] : scratch) {
      content = gcd(content, x);
      if (content == 1) break;
    }
    if (content > 1) {
      for (auto& [c, x] : scratch) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
    m.swap(scratch);
  }

  std::size_t weight(const Value& v) const { return mpz_sizeinbase(v.get_mpz_t(), 2); }
};

template <class Ops>
std::size_t eliminate(std::vector<Line<typename Ops::Value>> lines, std::size_t width,
                      std::size_t bound, const Ops& ops,
                      std::vector<Line<typename Ops::Value>>* pivots_out = nullptr) {
  using V = typename Ops::Value;
  std::vector<std::vector<std::uint32_t>> occurs(width);
  std::set<std::pair<std::size_t, std::uint32_t>> queue;
  for (std::uint32_t i = 0; i < lines.size(); ++i) {
    for (const auto& [c, v] : lines[i]) occurs[c].push_back(i);
    if (!lines[i].empty()) queue.emplace(lines[i].size(), i);
  }
  std::vector<char> done(lines.size(), 0);
  std::vector<std::uint32_t> fresh;
  Line<V> scratch;
  std::size_t rank = 0;
  auto find = [](const Line<V>& line, std::uint32_t c) -> std::size_t {
    auto it = std::lower_bound(line.begin(), line.end(), c,
                               [](const std::pair<std::uint32_t, V>& e, std::uint32_t key) { return e.first < key; });
    return (it != line.end() && it->first == c) ? static_cast<std::size_t>(it - line.begin()) : line.size();
  };

  while (!queue.empty() && rank < bound) {
    const std::uint32_t li = queue.begin()->second;
    queue.erase(queue.begin());
    Line<V>& pivot_line = lines[li];
    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot_line.size(); ++k) {
      const auto ck = occurs[pivot_line[k].first].size();
      const auto cb = occurs[pivot_line[best].first].size();
      if (ck < cb || (ck == cb && ops.weight(pivot_line[k].second) < ops.weight(pivot_line[best].second))) best = k;
    }
    const std::uint32_t col = pivot_line[best].first;
    done[li] = 1;
    ++rank;
    for (std::uint32_t mi : occurs[col]) {
      if (done[mi]) continue;
      Line<V>& m = lines[mi];
      const std::size_t pos = find(m, col);
      if (pos == m.size()) continue;
      queue.erase({m.size(), mi});
      fresh.clear();
      ops.combine(m, pivot_line, pos, best, fresh, scratch);
      for (auto c : fresh) occurs[c].push_back(mi);
      if (!m.empty()) queue.emplace(m.size(), mi);
    }
    occurs[col].clear();
    occurs[col].shrink_to_fit();
    if (pivots_out) {
      pivots_out->push_back(std::move(pivot_line));
    } else {
      Line<V>().swap(pivot_line);
    }
  }
  return rank;
}

// Lines along the shorter side: rows when rows <= cols, columns otherwise.
template <class V, class Convert>
std::vector<Line<V>> make_lines(const SparseMatrix& m, bool by_rows, Convert convert) {
  std::vector<Line<V>> lines(by_rows ? m.rows() : m.cols());
  for (const auto& e : m.entries()) {
    auto [li, idx] = by_rows ? std::pair(e.row, e.col) : std::pair(e.col, e.row);
    lines[li].emplace_back(idx, convert(e.value));
  }
  if (!by_rows) {
    for (auto& l : lines) std::sort(l.begin(), l.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return lines;
}

std::size_t effective_bound(const SparseMatrix& m, std::optional<std::size_t> upper) {
  std::size_t b = std::min(m.rows(), m.cols());
  if (upper) b = std::min(b, *upper);
  return b;
}

std::optional<std::uint32_t> residue_of(const Scalar& s, std::uint32_t p) {
  if (!s.field().is_rational()) {
    if (s.field().modulus() != p) throw ContextError("modular rank over a different prime field");
    return s.residue();
  }
  const mpq_class& q = s.rational();
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) return std::nullopt;
  return static_cast<std::uint32_t>(std::uint64_t{static_cast<std::uint32_t>(num.get_ui())} *
                                    inv_mod(static_cast<std::uint32_t>(den.get_ui()), p) % p);
}

}  // namespace

std::optional<std::size_t> rank_mod_prime(const SparseMatrix& m, std::uint32_t p,
                                          std::optional<std::size_t> upper_bound) {
  const std::size_t bound = effective_bound(m, upper_bound);
  if (bound == 0 || m.is_zero()) return 0;
  const bool by_rows = m.rows() <= m.cols();
  std::vector<Line<std::uint32_t>> lines(by_rows ? m.rows() : m.cols());
  for (const auto& e : m.entries()) {
    auto r = residue_of(e.value, p);
    if (!r) return std::nullopt;
    if (*r == 0) continue;
    auto [li, idx] = by_rows ? std::pair(e.row, e.col) : std::pair(e.col, e.row);
    lines[li].emplace_back(idx, *r);
  }
  if (!by_rows) {
    for (auto& l : lines) std::sort(l.begin(), l.end());
  }
  return eliminate(std::move(lines), by_rows ? m.cols() : m.rows(), bound, ModOps{p});
}

std::size_t rank_rational(const SparseMatrix& m, std::optional<std::size_t> upper_bound) {
  if (!m.field().is_rational()) throw ContextError("rank_rational on a prime-field matrix");
  const std::size_t bound = effective_bound(m, upper_bound);
  if (bound == 0 || m.is_zero()) return 0;
  const bool by_rows = m.rows() <= m.cols();
  auto lines = make_lines<mpq_class>(m, by_rows, [](const Scalar& s) { return s.rational(); });
  std::vector<Line<mpz_class>> ints(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    mpz_class scale = 1;
    for (const auto& [c, v] : lines[i]) scale = lcm(scale, v.get_den());
    ints[i].reserve(lines[i].size());
    for (const auto& [c, v] : lines[i]) ints[i].emplace_back(c, mpz_class(v.get_num() * (scale / v.get_den())));
  }
  return eliminate(std::move(ints), by_rows ? m.cols() : m.rows(), bound, IntOps{});
}

RankResult rank(const SparseMatrix& m, std::optional<std::size_t> upper_bound) {
  RankResult out;
  const std::size_t bound = effective_bound(m, upper_bound);
  if (!m.field().is_rational()) {
    out.rank = *rank_mod_prime(m, m.field().modulus(), bound);
    out.method = "prime-field";
    return out;
  }
  out.prepass_rank = rank_mod_prime(m, kPrepassPrime, bound);
  if (out.prepass_rank && *out.prepass_rank == bound) {
    out.rank = bound;
    out.method = "modular-certified";
    return out;
  }
  out.rank = rank_rational(m, bound);
  out.method = "rational-elimination";
  return out;
}

std::size_t dense_rank(std::vector<std::vector<Scalar>> rows, Field field) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Scalar inv = rows[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c] * inv;
      for (std::size_t k = c; k < ncols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  (void)field;
  return rank;
}

DenseVector zero_vector(std::size_t dim, Field field) { return DenseVector(dim, Scalar::zero(field)); }

DenseVector column_of(const SparseMatrix& m, std::size_t col) {
  DenseVector v = zero_vector(m.rows(), m.field());
  for (const auto& e : m.entries()) {
    if (e.col == col) v[e.row] = e.value;
  }
  return v;
}

DenseVector apply(const SparseMatrix& m, const DenseVector& v) {
  if (v.size() != m.cols()) throw RankError("vector length does not match matrix columns");
  DenseVector out = zero_vector(m.rows(), m.field());
  for (const auto& e : m.entries()) {
    if (!v[e.col].is_zero()) out[e.row] += e.value * v[e.col];
  }
  return out;
}

DenseVector ReducedBasis::reduce(DenseVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!rows_[i][k].is_zero()) v[k] -= c * rows_[i][k];
    }
  }
  return v;
}

bool ReducedBasis::insert(DenseVector v) {
  if (v.size() != dim_) throw RankError("vector length does not match the ambient dimension");
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < dim_ && v[piv].is_zero()) ++piv;
  if (piv == dim_) return false;
  const Scalar inv = v[piv].inverse();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) {
      if (!v[k].is_zero()) row[k] -= c * v[k];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

std::vector<DenseVector> kernel_basis(const SparseMatrix& m) {
  ReducedBasis rref(m.cols(), m.field());
  std::vector<DenseVector> rows(m.rows(), zero_vector(m.cols(), m.field()));
  for (const auto& e : m.entries()) rows[e.row][e.col] = e.value;
  for (auto& r : rows) rref.insert(std::move(r));
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : rref.pivots()) is_pivot[p] = 1;
  std::vector<DenseVector> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVector v = zero_vector(m.cols(), m.field());
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < rref.size(); ++i) v[rref.pivots()[i]] = -rref.vectors()[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

ReducedBasis column_space(const SparseMatrix& m) {
  ReducedBasis basis(m.rows(), m.field());
  std::vector<DenseVector> cols(m.cols(), zero_vector(m.rows(), m.field()));
  for (const auto& e : m.entries()) cols[e.col][e.row] = e.value;
  for (auto& c : cols) {
    if (basis.size() == m.rows()) break;
    basis.insert(std::move(c));
  }
  return basis;
}

}  // namespace hhl
