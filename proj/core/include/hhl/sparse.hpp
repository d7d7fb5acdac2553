#pragma once

// Sparse matrices over a Field in coordinate form. Entries are kept sorted
// by (row, col) with no duplicates and no stored zeros, so structural
// equality is matrix equality.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hhl/scalar.hpp"

namespace hhl {

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  Scalar value;

  bool operator==(const SparseEntry&) const = default;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, Field field)
      : rows_(rows), cols_(cols), field_(field) {}

  // Sums duplicate coordinates, drops zeros, sorts. Throws RankError on an
  // index out of range.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, Field field,
                                    std::vector<SparseEntry> entries);
  static SparseMatrix identity(std::size_t n, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Scalar& c) const;
  // Keeps the listed rows and columns, renumbered in the order given.
  SparseMatrix select(const std::vector<std::size_t>& row_ids,
                      const std::vector<std::size_t>& col_ids) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::rationals();
  std::vector<SparseEntry> entries_;
};

// Accumulates entries in any order; finish() yields the canonical matrix.
class SparseBuilder {
 public:
  SparseBuilder(std::size_t rows, std::size_t cols, Field field)
      : rows_(rows), cols_(cols), field_(field) {}

  void add(std::size_t row, std::size_t col, const Scalar& v);
  SparseMatrix finish() &&;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> acc_;
};

}  // namespace hhl
