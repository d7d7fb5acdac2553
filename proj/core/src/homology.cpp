#include "hhl/homology.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "hhl/errors.hpp"
#include "hhl/linalg.hpp"

namespace hhl {

std::size_t HomologyReport::betti_at(int r) const {
  auto it = betti.find(r);
  return it == betti.end() ? 0 : it->second;
}

bool HomologyReport::vanishes_through(int d_max) const {
  for (const auto& [r, b] : betti) {
    if (r <= d_max && b != 0) return false;
  }
  return true;
}

void verify_boundary_squares_zero(const LabeledComplex& c) {
  for (int r = c.lo + 1; r <= c.hi; ++r) {
    if (c.dim(r - 2) == 0 || c.dim(r) == 0) continue;
    if (!(c.boundary(r - 1) * c.boundary(r)).is_zero()) {
      throw IntegrityError("boundary does not square to zero: d_" + std::to_string(r - 1) + " o d_" +
                           std::to_string(r) + " != 0 in " + c.info.kind);
    }
  }
}

HomologyReport homology_dims(const LabeledComplex& c, const HomologyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.verify_boundary) verify_boundary_squares_zero(c);

  HomologyReport rep;
  rep.info = c.info;
  rep.lo = c.lo;
  rep.hi = c.hi;
  const Field field = c.field();
  const bool rational = field.is_rational();
  const std::uint32_t prime = rational ? kPrepassPrime : field.modulus();

  // Modular ranks for every degree; exact over F_p, lower bounds over Q.
  std::map<int, std::optional<std::size_t>> modular;
  {
    std::vector<int> degrees;
    for (int r = c.lo; r <= c.hi; ++r) degrees.push_back(r);
    const unsigned jobs = std::max(1u, opts.jobs);
    for (std::size_t first = 0; first < degrees.size(); first += jobs) {
      std::vector<std::pair<int, std::future<std::optional<std::size_t>>>> batch;
      for (std::size_t k = first; k < std::min(degrees.size(), first + jobs); ++k) {
        const int r = degrees[k];
        auto task = [&c, r, prime] { return rank_mod_prime(c.boundary(r), prime); };
        batch.emplace_back(r, std::async(jobs > 1 ? std::launch::async : std::launch::deferred, task));
      }
      for (auto& [r, fut] : batch) modular[r] = fut.get();
    }
  }

  for (int r = c.lo; r <= c.hi; ++r) {
    std::size_t bound = std::min(c.dim(r), c.dim(r - 1));
    if (r > c.lo) bound = std::min(bound, c.dim(r - 1) - rep.ranks[r - 1]);
    if (r < c.hi && modular[r + 1]) bound = std::min(bound, c.dim(r) - *modular[r + 1]);
    const auto& pre = modular[r];
    if (!rational) {
      rep.ranks[r] = *pre;
      rep.rank_methods[r] = "prime-field";
    } else if (pre && *pre == bound) {
      rep.ranks[r] = bound;
      rep.rank_methods[r] = "modular-certified";
    } else {
      rep.ranks[r] = rank_rational(c.boundary(r), bound);
      rep.rank_methods[r] = "rational-elimination";
      if (pre && rep.ranks[r] > *pre) rep.prepass_deficits[r] = rep.ranks[r] - *pre;
    }
  }

  for (int r = c.lo; r <= c.hi; ++r) {
    const std::size_t out = rep.ranks[r];
    const std::size_t in = r < c.hi ? rep.ranks[r + 1] : 0;
    if (out + in > c.dim(r)) {
      throw IntegrityError("ranks exceed the dimension in degree " + std::to_string(r));
    }
    rep.dims[r] = c.dim(r);
    rep.betti[r] = c.dim(r) - out - in;
    const long long sign = (r % 2 == 0) ? 1 : -1;
    rep.euler_dims += sign * static_cast<long long>(c.dim(r));
    rep.euler_betti += sign * static_cast<long long>(rep.betti[r]);
  }
  if (opts.timing) {
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

}  // namespace hhl
