#pragma once

// Exhaustive checks of the Hecke and Coxeter identities the acyclicity
// argument rests on. Every family enumerates all valid index tuples for each
// rank up to n_max and compares both sides exactly.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hhl/scalar.hpp"

namespace hhl {

struct IdentityFailure {
  int n = 0;
  std::map<std::string, std::string> params;
  std::string lhs;
  std::string rhs;
};

struct IdentityFamilyResult {
  std::string family;
  std::size_t checked = 0;
  std::size_t failed = 0;
  // At most kMaxRecordedFailures of them.
  std::vector<IdentityFailure> failures;
};

inline constexpr std::size_t kMaxRecordedFailures = 5;

struct IdentityReport {
  int n_max = 0;
  ScalarConfig scalars;
  std::vector<IdentityFamilyResult> families;

  bool all_passed() const;
  std::size_t total_checked() const;
};

struct IdentityOptions {
  // Negative control: drop the last letter of every nonempty xi(r).
  bool perturb_xi = false;
  // Seeds for the random reduced words compared against the canonical one.
  std::uint64_t seed = 20240501;
};

// Families, in report order:
//   quadratic_relation, braid_relations, reduced_word_independence,
//   u_n_conjugation, u_m_times_t_ab, t_k_past_v, xi_intertwining,
//   xi_inverse.
IdentityReport run_identity_suites(int n_max, const ScalarConfig& scalars, const IdentityOptions& opts = {});

}  // namespace hhl
