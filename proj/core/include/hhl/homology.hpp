#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhl/complexes.hpp"

namespace hhl {

struct HomologyOptions {
  // Check d o d = 0 before computing ranks.
  bool verify_boundary = true;
  // Worker threads for the per-degree modular pre-pass.
  unsigned jobs = 1;
  // Record wall-clock time in the report.
  bool timing = false;
};

struct HomologyReport {
  ComplexInfo info;
  int lo = 0;
  int hi = -1;
  std::map<int, std::size_t> dims;
  std::map<int, std::size_t> ranks;  // rank of the boundary leaving degree r
  std::map<int, std::size_t> betti;
  std::map<int, std::string> rank_methods;
  // Rational ranks that exceeded the modular pre-pass rank, per degree.
  std::map<int, std::size_t> prepass_deficits;
  long long euler_dims = 0;
  long long euler_betti = 0;
  std::optional<double> elapsed_ms;

  std::size_t betti_at(int r) const;
  // betti(d) = 0 for every d <= d_max inside the degree range.
  bool vanishes_through(int d_max) const;
};

// Throws IntegrityError naming the first degree where d o d != 0.
void verify_boundary_squares_zero(const LabeledComplex& c);

HomologyReport homology_dims(const LabeledComplex& c, const HomologyOptions& opts = {});

}  // namespace hhl
