#pragma once

// Tor over Hecke algebras of types A and B, with the trivial module on both
// sides, computed from the normalized bar complex.
//
// The augmentation ideal has basis e_w = T_w - q^{l(w)} T_1 for w != 1, so
// the degree-k chain group has basis the k-tuples (e_{w_1} | ... | e_{w_k})
// and dimension (|W| - 1)^k. Both outer face maps vanish on the ideal, which
// leaves d(a_1|...|a_k) = sum_{i=1}^{k-1} (-1)^i (...|a_i a_{i+1}|...).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hhl/complexes.hpp"
#include "hhl/hecke.hpp"
#include "hhl/linalg.hpp"

namespace hhl {

inline constexpr std::uint64_t kDefaultGuard = 5'000'000;

// HHL_GUARD when set, else kDefaultGuard. Throws ConfigError unless the
// variable holds a positive integer.
std::uint64_t guard_from_env();

// Largest chain group (|W| - 1)^k over k <= d_max + 1, saturating.
std::uint64_t bar_size_estimate(CoxeterType type, int n, int d_max);

// Throws GuardError when the estimate exceeds the guard.
void check_guard(CoxeterType type, int n, int d_max, std::uint64_t guard);

// Degrees 0..d_max+1 of the normalized bar complex. Labels are attached only
// when requested.
LabeledComplex bar_complex(CoxeterType type, int n, int d_max, const ScalarConfig& scalars,
                           std::uint64_t guard = kDefaultGuard, bool with_labels = false);

// dim Tor_d(1, 1) for 0 <= d <= d_max.
std::vector<std::size_t> bar_tor_dims(CoxeterType type, int n, int d_max, const ScalarConfig& scalars,
                                      std::uint64_t guard = kDefaultGuard);

struct StabilizationReport {
  CoxeterType type = CoxeterType::B;
  int n = 0;  // the map goes from rank n-1 to rank n
  int d = 0;
  std::size_t dim_source = 0;
  std::size_t dim_target = 0;
  std::size_t rank = 0;
  bool injective = false;
  bool surjective = false;
  bool isomorphism() const { return injective && surjective; }
  // dim_target x dim_source, in the chosen homology bases.
  std::vector<std::vector<Scalar>> matrix;
};

// The map Tor_d over rank n-1 -> Tor_d over rank n induced by the inclusion
// of algebras. Homology bases: boundaries in reduced echelon form, then cycle
// representatives reduced against them in order.
StabilizationReport stabilization_map(CoxeterType type, int n, int d, const ScalarConfig& scalars,
                                      std::uint64_t guard = kDefaultGuard);

}  // namespace hhl
