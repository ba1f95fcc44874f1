#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

namespace kdyck {

/// Power series in x = z^{k+1} truncated after x^N, with exact integer
/// coefficients. The truncation order is fixed at construction; binary
/// operations on series of different orders truncate to the smaller one.
class Series {
 public:
  explicit Series(std::size_t order);
  Series(std::size_t order, std::vector<mpz_class> coeffs);
  Series(std::size_t order, std::initializer_list<long> coeffs);

  /// The polynomial with the given coefficients, truncated or zero-padded.
  static Series from_poly(const std::vector<mpz_class>& poly, std::size_t order);
  static Series one(std::size_t order) { return Series(order, {1}); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
  mpz_class& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  Series truncate(std::size_t order) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series pow(const Series& a, unsigned j);
/// Multiplicative inverse. Throws std::domain_error unless a[0] is +1 or -1.
Series reciprocal(const Series& a);

/// The series y with y(0) = 1 and y = 1 + x y^{k+1}, together with its k.
struct YSeries {
  int k;
  Series series;
};

/// Fixed-point iteration y <- 1 + x y^{k+1}; pass m fixes the x^m coefficient.
YSeries solve_y(int k, std::size_t order);

/// k = 1 numerator of the probability generating function of the F-length:
/// entry (n, s) is r_s g_{n-s}, where r = 1/D_t (its index counts w) and
/// g = D_t C^{t+1}. The dense matrix is produced on demand.
class BivariateNumerator {
 public:
  BivariateNumerator(int t, std::size_t order);

  int t() const { return t_; }
  std::size_t order() const { return r_.order(); }
  const Series& f_series() const { return r_; }
  const Series& g_series() const { return g_; }

  mpz_class at(std::size_t n, std::size_t s) const;
  /// Entries s = 0..n of row n.
  std::vector<mpz_class> row(std::size_t n) const;
  /// (order+1) x (order+1) lower-triangular matrix.
  std::vector<std::vector<mpz_class>> matrix() const;

 private:
  int t_;
  Series r_;
  Series g_;
};

BivariateNumerator bivariate_numerator(int t, std::size_t order);

}  // namespace kdyck
