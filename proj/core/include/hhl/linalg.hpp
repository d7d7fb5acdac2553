#pragma once

// Exact rank and small dense reductions.
//
// Ranks use sparse elimination on the shorter side of the matrix with a
// Markowitz-style pivot rule: the line with fewest nonzeros is taken next
// and its pivot is the index occurring in the fewest other lines. Prime
// fields eliminate directly. Over Q every line is scaled to integers and
// combined fraction-free, dividing out the content after each step.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhl/scalar.hpp"
#include "hhl/sparse.hpp"

namespace hhl {

// Large prime for the modular pre-pass over Q.
inline constexpr std::uint32_t kPrepassPrime = 2147483647u;

struct RankResult {
  std::size_t rank = 0;
  // "prime-field", "modular-certified" or "rational-elimination".
  std::string method;
  // Rank modulo kPrepassPrime when the pre-pass ran (a lower bound over Q).
  std::optional<std::size_t> prepass_rank;
};

// `upper_bound` lets elimination stop early once the rank is forced; it must
// really bound the rank (for instance dim ker of the next boundary down).
RankResult rank(const SparseMatrix& m, std::optional<std::size_t> upper_bound = std::nullopt);

// Plain modular rank of a matrix over Q or F_p, reduced modulo the prime p.
// Returns nullopt when some denominator vanishes modulo p.
std::optional<std::size_t> rank_mod_prime(const SparseMatrix& m, std::uint32_t p,
                                          std::optional<std::size_t> upper_bound = std::nullopt);

// Exact rank over Q; the matrix must be rational.
std::size_t rank_rational(const SparseMatrix& m, std::optional<std::size_t> upper_bound = std::nullopt);

// Textbook dense Gaussian elimination. Used as an oracle and for tiny cases.
std::size_t dense_rank(std::vector<std::vector<Scalar>> rows, Field field);

using DenseVector = std::vector<Scalar>;

DenseVector zero_vector(std::size_t dim, Field field);
DenseVector column_of(const SparseMatrix& m, std::size_t col);
DenseVector apply(const SparseMatrix& m, const DenseVector& v);

// A subspace in reduced row echelon form. Every stored vector has a 1 at its
// pivot and zeros at every other stored pivot.
class ReducedBasis {
 public:
  ReducedBasis(std::size_t dim, Field field) : dim_(dim), field_(field) {}

  // Clears the components of v at every stored pivot.
  DenseVector reduce(DenseVector v) const;
  // Adds v to the span; false when v was already in it.
  bool insert(DenseVector v);

  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<DenseVector>& vectors() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  Field field_;
  std::vector<DenseVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Basis of the kernel of m (as column vectors of length m.cols()), read off
// from the reduced row echelon form: one vector per free column.
std::vector<DenseVector> kernel_basis(const SparseMatrix& m);

// Basis of the column space of m, as vectors of length m.rows().
ReducedBasis column_space(const SparseMatrix& m);

}  // namespace hhl
