#include "kdyck/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdyck/closed_forms.hpp"

namespace kdyck {

Series::Series(std::size_t order) : coeffs_(order + 1, 0) {}

Series::Series(std::size_t order, std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, 0);
}

Series::Series(std::size_t order, std::initializer_list<long> coeffs) : coeffs_(order + 1, 0) {
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i > order) break;
    coeffs_[i++] = c;
  }
}

Series Series::from_poly(const std::vector<mpz_class>& poly, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i < poly.size() && i <= order; ++i) s[i] = poly[i];
  return s;
}

Series Series::truncate(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return Series(order, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series out(n);
  mpz_class term;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      mpz_mul(term.get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      out[i + j] += term;
    }
  }
  return out;
}

Series pow(const Series& a, unsigned j) {
  Series result = Series::one(a.order());
  Series base = a;
  while (j > 0) {
    if (j & 1u) result = mul(result, base);
    j >>= 1;
    if (j > 0) base = mul(base, base);
  }
  return result;
}

Series reciprocal(const Series& a) {
  if (a[0] != 1 && a[0] != -1)
    throw std::domain_error("reciprocal needs a unit constant term");
  const mpz_class& c0 = a[0];  // c0 == 1/c0
  Series out(a.order());
  out[0] = c0;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (a[i] != 0) acc += a[i] * out[n - i];
    out[n] = -acc * c0;
  }
  return out;
}

YSeries solve_y(int k, std::size_t order) {
  if (k < 1) throw std::invalid_argument("solve_y needs k >= 1");
  // y_m agrees with y through x^m; only that prefix is carried forward.
  Series y = Series::one(0);
  for (std::size_t m = 1; m <= order; ++m) {
    Series prev = Series::from_poly(y.coeffs(), m - 1);
    Series power = pow(prev, static_cast<unsigned>(k + 1));
    Series next(m);
    next[0] = 1;
    for (std::size_t i = 0; i < m; ++i) next[i + 1] = power[i];
    y = std::move(next);
  }
  return {k, Series::from_poly(y.coeffs(), order)};
}

BivariateNumerator::BivariateNumerator(int t, std::size_t order)
    : t_(t), r_(order), g_(order) {
  if (t < 0) throw std::invalid_argument("bivariate_numerator needs t >= 0");
  Series d = Series::from_poly(d_poly(1, t).coeffs, order);
  r_ = reciprocal(d);
  g_ = mul(d, pow(solve_y(1, order).series, static_cast<unsigned>(t + 1)));
}

mpz_class BivariateNumerator::at(std::size_t n, std::size_t s) const {
  if (n > order()) throw std::out_of_range("row beyond series order");
  if (s > n) return 0;
  return r_[s] * g_[n - s];
}

std::vector<mpz_class> BivariateNumerator::row(std::size_t n) const {
  std::vector<mpz_class> out;
  out.reserve(n + 1);
  for (std::size_t s = 0; s <= n; ++s) out.push_back(at(n, s));
  return out;
}

std::vector<std::vector<mpz_class>> BivariateNumerator::matrix() const {
  std::vector<std::vector<mpz_class>> out(order() + 1, std::vector<mpz_class>(order() + 1, 0));
  for (std::size_t n = 0; n <= order(); ++n)
    for (std::size_t s = 0; s <= n; ++s) out[n][s] = at(n, s);
  return out;
}

BivariateNumerator bivariate_numerator(int t, std::size_t order) { return {t, order}; }

}  // namespace kdyck
