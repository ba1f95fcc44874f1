#include "kdyck/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace kdyck {

mpz_class binom(long a, long b) {
  if (a < 0) throw std::domain_error("binom: negative upper index " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class ycoeff(int k, int j, long n) {
  if (k < 1 || j < 1 || n < 0) throw std::invalid_argument("ycoeff needs k >= 1, j >= 1, n >= 0");
  const long top = static_cast<long>(k + 1) * n + j;
  mpz_class num = binom(top, n) * j;
  if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(top)))
    throw std::logic_error("ycoeff: inexact division");
  mpz_class out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(top));
  return out;
}

mpz_class count_simple(int k, int t, long n) {
  if (t < 0 || t > k)
    throw std::invalid_argument("count_simple needs 0 <= t <= k; use count_general for t > k");
  return ycoeff(k, t + 1, n);
}

DPoly d_poly_explicit(int k, int m) {
  if (k < 1 || m < 0) throw std::invalid_argument("d_poly needs k >= 1, m >= 0");
  DPoly d{k, m, {}};
  for (long l = 0; l <= m / k; ++l) {
    mpz_class c = binom(m - static_cast<long>(k) * l, l);
    d.coeffs.push_back(l % 2 ? mpz_class(-c) : c);
  }
  return d;
}

DPoly d_poly_recursive(int k, int m) {
  if (k < 1 || m < 0) throw std::invalid_argument("d_poly needs k >= 1, m >= 0");
  std::vector<std::vector<mpz_class>> seq;
  seq.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    if (j <= k) {
      seq.push_back({1});
      continue;
    }
    std::vector<mpz_class> cur = seq[j - 1];
    const auto& back = seq[j - k - 1];
    if (cur.size() < back.size() + 1) cur.resize(back.size() + 1, 0);
    for (std::size_t l = 0; l < back.size(); ++l) cur[l + 1] -= back[l];
    seq.push_back(std::move(cur));
  }
  // Same length as the binomial sum: floor(m/k) + 1 entries, trailing ones zero.
  std::vector<mpz_class> out = std::move(seq[m]);
  out.resize(m / k + 1, 0);
  return {k, m, std::move(out)};
}

DPoly d_poly(int k, int m) {
  DPoly d = d_poly_explicit(k, m);
  if (!(d == d_poly_recursive(k, m)))
    throw std::logic_error("D_" + std::to_string(m) + ": binomial sum and recurrence disagree");
  return d;
}

mpz_class count_general(int k, int t, long n) {
  if (k < 1 || t < 0 || n < 0) throw std::invalid_argument("count_general needs k >= 1, t >= 0, n >= 0");
  const DPoly d = d_poly_explicit(k, t);
  mpz_class total = 0;
  for (long l = 0; l < static_cast<long>(d.coeffs.size()) && l <= n; ++l)
    total += d.coeffs[l] * ycoeff(k, t + 1, n - l);
  return total;
}

std::vector<mpz_class> f_part_counts(int k, int t, long order) {
  if (k < 1 || t < 0 || order < 0) throw std::invalid_argument("f_part_counts needs k >= 1, t >= 0, order >= 0");
  const DPoly d = d_poly_explicit(k, t);
  std::vector<mpz_class> r(order + 1, 0);
  r[0] = 1;
  for (long n = 1; n <= order; ++n) {
    mpz_class acc = 0;
    for (long i = 1; i <= n && i < static_cast<long>(d.coeffs.size()); ++i) acc += d.coeffs[i] * r[n - i];
    r[n] = -acc;
  }
  return r;
}

mpq_class rho(int k) {
  if (k < 1) throw std::invalid_argument("rho needs k >= 1");
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), k, k);
  mpz_ui_pow_ui(den.get_mpz_t(), k + 1, k + 1);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

RatioReport ratio_report(int k, int t, long n_max) {
  if (k < 1 || t < 0 || n_max < 0) throw std::invalid_argument("ratio_report needs k >= 1, t >= 0, n_max >= 0");
  RatioReport rep{k, t, {}, 0, 0.0};
  rep.quotients.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    mpq_class q(count_general(k, t, n), ycoeff(k, t + 1, n));
    q.canonicalize();
    rep.quotients.push_back(q);
  }
  const DPoly d = d_poly_explicit(k, t);
  const mpq_class r = rho(k);
  mpq_class power = 1;
  for (const auto& c : d.coeffs) {
    rep.limit += mpq_class(c) * power;  // c already carries (-1)^l
    power *= r;
  }
  rep.limit_float = rep.limit.get_d();
  return rep;
}

mpq_class mean_j(int t) {
  if (t < 0) throw std::invalid_argument("mean_j needs t >= 0");
  mpq_class m(t * (t + 2), 3);
  m.canonicalize();
  return m;
}

mpq_class limit_dist_mass(int t, long m) {
  if (t < 0 || m < 0) throw std::invalid_argument("limit_dist_mass needs t >= 0, m >= 0");
  // For t == 0 the upper index 2m-1+t is -1 at m == 0; D_0 = 1 makes the
  // law a point mass there anyway.
  if (t == 0) return m == 0 ? 1 : 0;
  const long top = 2 * m - 1 + t;
  const long period = t + 1;
  mpz_class sum = 0;
  for (long shift = 0; shift <= m; shift += period)
    sum += binom(top, m - shift) - 2 * binom(top, m - 1 - shift) + binom(top, m - 2 - shift);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(t + 2 * m));  // 2^t 4^m
  mpq_class out(sum * (t + 1), den);
  out.canonicalize();
  return out;
}

}  // namespace kdyck
