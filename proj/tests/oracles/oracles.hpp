#pragma once

// Independent reference implementations for the test suites. They share
// only value types with the library and recompute everything naively.

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "hhl/complexes.hpp"
#include "hhl/coxeter.hpp"
#include "hhl/hecke.hpp"
#include "hhl/sparse.hpp"

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Cayley-graph distances from the identity, by breadth-first search using
// only position swaps and the sign flip of the first position.
std::map<std::vector<int>, int> bfs_lengths(int n, hhl::CoxeterType type = hhl::CoxeterType::B);

// (g*h)(i) = g(h(i)) on one-line notation.
std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h);

QMatrix to_dense(const hhl::SparseMatrix& m);
std::size_t rank(QMatrix m);
// Basis of {x : m x = 0}.
std::vector<std::vector<mpq_class>> kernel(QMatrix m, std::size_t cols);

// Betti numbers from dense ranks of the boundaries (rational complexes only).
std::map<int, std::size_t> dense_betti(const hhl::LabeledComplex& c);

// Number of (signed) injective words with r+1 letters from {1..n}.
std::size_t count_injective_words(int n, int r, bool signed_letters);

// Tor_d(1, 1) over HB_1 for d = 0..d_max from the 2-periodic resolution
// ... -> A --(T+1)--> A --(T-q)--> A -> 1.
std::vector<std::size_t> tor_rank_one(const hhl::ScalarConfig& scalars, int d_max);

// Tor_d(1, 1) over HB_n (rational q) for d = 0..d_max, from a free
// resolution built greedily by dense linear algebra.
std::vector<std::size_t> tor_free_resolution(int n, const hhl::ScalarConfig& scalars, int d_max);

}  // namespace oracle
