#include "hhl/sparse.hpp"

#include <algorithm>
#include <string>

#include "hhl/errors.hpp"

namespace hhl {
namespace {

void check_fields(const SparseMatrix& a, const SparseMatrix& b) {
  if (!(a.field() == b.field())) throw ContextError("matrices over different fields");
}

}  // namespace

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, Field field,
                                         std::vector<SparseEntry> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw RankError("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                      ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return std::pair(a.row, a.col) < std::pair(b.row, b.col);
  });
  SparseMatrix m(rows, cols, field);
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
    } else {
      m.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(m.entries_, [](const SparseEntry& e) { return e.value.is_zero(); });
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n, Field field) {
  std::vector<SparseEntry> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), Scalar::one(field)});
  }
  return from_triplets(n, n, field, std::move(e));
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(r, c),
                             [](const SparseEntry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair<std::size_t, std::size_t>(e.row, e.col) < key;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Scalar::zero(field_);
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, field_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  std::vector<SparseEntry> s = entries_;
  for (auto& e : s) e.value *= c;
  return from_triplets(rows_, cols_, field_, std::move(s));
}

SparseMatrix SparseMatrix::select(const std::vector<std::size_t>& row_ids,
                                  const std::vector<std::size_t>& col_ids) const {
  constexpr std::uint32_t kAbsent = 0xffffffffu;
  std::vector<std::uint32_t> rmap(rows_, kAbsent), cmap(cols_, kAbsent);
  for (std::size_t i = 0; i < row_ids.size(); ++i) rmap.at(row_ids[i]) = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < col_ids.size(); ++i) cmap.at(col_ids[i]) = static_cast<std::uint32_t>(i);
  std::vector<SparseEntry> out;
  for (const auto& e : entries_) {
    if (rmap[e.row] != kAbsent && cmap[e.col] != kAbsent) out.push_back({rmap[e.row], cmap[e.col], e.value});
  }
  return from_triplets(row_ids.size(), col_ids.size(), field_, std::move(out));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  check_fields(a, b);
  if (a.cols() != b.rows()) throw RankError("matrix product with mismatched inner dimensions");
  // Row starts of b.
  std::vector<std::size_t> start(b.rows() + 1, 0);
  for (const auto& e : b.entries()) ++start[e.row + 1];
  for (std::size_t i = 0; i < b.rows(); ++i) start[i + 1] += start[i];
  std::vector<SparseEntry> out;
  for (const auto& ea : a.entries()) {
    for (std::size_t k = start[ea.col]; k < start[ea.col + 1]; ++k) {
      const auto& eb = b.entries()[k];
      out.push_back({ea.row, eb.col, ea.value * eb.value});
    }
  }
  return SparseMatrix::from_triplets(a.rows(), b.cols(), a.field(), std::move(out));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  check_fields(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw RankError("matrix sum with mismatched shapes");
  std::vector<SparseEntry> out = a.entries();
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return SparseMatrix::from_triplets(a.rows(), a.cols(), a.field(), std::move(out));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  return a + b.scaled(-Scalar::one(b.field()));
}

void SparseBuilder::add(std::size_t row, std::size_t col, const Scalar& v) {
  if (row >= rows_ || col >= cols_) throw RankError("builder entry out of range");
  if (v.is_zero()) return;
  auto key = std::pair(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col));
  auto [it, inserted] = acc_.try_emplace(key, v);
  if (!inserted) it->second += v;
}

SparseMatrix SparseBuilder::finish() && {
  std::vector<SparseEntry> e;
  e.reserve(acc_.size());
  for (auto& [k, v] : acc_) {
    if (!v.is_zero()) e.push_back({k.first, k.second, std::move(v)});
  }
  return SparseMatrix::from_triplets(rows_, cols_, field_, std::move(e));
}

}  // namespace hhl
