#pragma once

#include <vector>

#include <gmpxx.h>

namespace kdyck {

/// C(a, b) for a >= 0; zero when b < 0 or b > a. Throws std::domain_error
/// for a < 0.
mpz_class binom(long a, long b);

/// [x^n] y^j = j/((k+1)n + j) * C((k+1)n + j, n).
mpz_class ycoeff(int k, int j, long n);

/// Number of k_t-Dyck paths of length (k+1)n for 0 <= t <= k.
mpz_class count_simple(int k, int t, long n);

/// The determinant polynomial D_m in x: coefficient of x^l is
/// (-1)^l C(m - k l, l), for 0 <= l <= m/k.
struct DPoly {
  int k;
  int m;
  std::vector<mpz_class> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  friend bool operator==(const DPoly&, const DPoly&) = default;
};

/// D_m from the binomial sum, cross-checked against the recurrence.
DPoly d_poly(int k, int m);
DPoly d_poly_explicit(int k, int m);
/// D_m = D_{m-1} - x D_{m-k-1} with D_0 = ... = D_k = 1.
DPoly d_poly_recursive(int k, int m);

/// Number of k_t-Dyck paths of length (k+1)n for any t >= 0.
mpz_class count_general(int k, int t, long n);

/// Coefficients of 1/D_t through x^order. Entry l counts the paths of
/// length t + (k+1)l that stay non-negative and first touch level t at
/// their last step.
std::vector<mpz_class> f_part_counts(int k, int t, long order);

/// k^k / (k+1)^(k+1).
mpq_class rho(int k);

struct RatioReport {
  int k;
  int t;
  /// quotients[n] = count_general(k,t,n) / ycoeff(k,t+1,n), n = 0..n_max.
  std::vector<mpq_class> quotients;
  /// sum over l of C(t - k l, l) (-rho)^l.
  mpq_class limit;
  double limit_float;
};

RatioReport ratio_report(int k, int t, long n_max);

/// Asymptotic mean of the F-length for k = 1: t(t+2)/3.
mpq_class mean_j(int t);

/// Limiting probability that (J - t)/2 == m for k = 1.
mpq_class limit_dist_mass(int t, long m);

}  // namespace kdyck
