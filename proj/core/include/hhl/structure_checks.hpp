#pragma once

// Matrix-level checks of the filtration of D^{\pm}(n): nesting and closure,
// the shape of the quotients F_p / F_{p-1}, their block decomposition, and
// the comparison maps Phi and Psi onto the complexes M^t and D^t(n-p).

#include <cstddef>
#include <string>
#include <vector>

#include "hhl/complexes.hpp"
#include "hhl/scalar.hpp"

namespace hhl {

struct CheckResult {
  std::string name;
  bool passed = true;
  // Number of individual comparisons behind the verdict.
  std::size_t checked = 0;
  // Location of the first failure, empty on success.
  std::string detail;
};

struct QuotientDim {
  int p = 0;
  int r = 0;
  std::size_t dim = 0;
  std::size_t expected = 0;
};

struct StructureReport {
  int n = 0;
  ScalarConfig scalars;
  std::vector<CheckResult> checks;
  std::vector<QuotientDim> quotient_dims;

  bool all_passed() const;
};

struct StructureOptions {
  // Negative control for the Psi comparison.
  bool perturb_xi = false;
};

// Runs every check for 1 <= p <= n. The q = 1 comparison with signed
// injective words is added only when q is 1.
StructureReport run_structure_checks(int n, const ScalarConfig& scalars, const StructureOptions& opts = {});

// Boundary matrices of a D-type complex (labels are coset representatives)
// agree entrywise with those of an injective-word complex, matched through
// w -> (w(n-r), ..., w(n)). Only the words hit by d's labels are compared.
CheckResult word_model_check(const LabeledComplex& d, const LabeledComplex& words, std::string name);

}  // namespace hhl
