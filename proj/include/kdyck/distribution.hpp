#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kdyck {

/// Law of s = (J - t)/2 for Dyck paths (k = 1), either at a fixed
/// half-length n or in the limit n -> infinity (n empty).
struct DistributionTable {
  int t = 0;
  std::optional<long> n;
  /// masses[s], exact.
  std::vector<mpq_class> masses;
  /// Finite n only: number of paths with each s, and the total count.
  std::vector<mpz_class> counts;
  mpz_class total = 0;
  /// Limit only: 1 - sum of the listed masses.
  mpq_class residual = 0;

  bool is_limit() const { return !n.has_value(); }
  /// J = t + 2s.
  long j_value(std::size_t s) const { return t + 2 * static_cast<long>(s); }
  mpq_class mean_s() const;
  mpq_class mean_j() const { return mpq_class(t) + 2 * mean_s(); }
};

/// Exact law of s over all non-negative paths of length 2n + t from 0 to t.
DistributionTable finite_dist(int t, long n);

/// Limiting masses for s = 0..max_s and the residual mass.
DistributionTable limit_dist(int t, long max_s);

/// Smallest truncation whose residual is below 10^-12.
DistributionTable limit_dist(int t);

/// (n, E[J]) for each requested n, exactly.
std::vector<std::pair<long, mpq_class>> mean_convergence(int t, const std::vector<long>& ns);

}  // namespace kdyck
