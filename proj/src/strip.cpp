#include "kdyck/strip.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "kdyck/closed_forms.hpp"

namespace kdyck {
namespace {

using ZPoly = std::vector<mpz_class>;

// p(z) with the x-polynomial d substituted as x = z^{k+1}, times z^shift.
ZPoly x_to_z(const std::vector<mpz_class>& d, int k, int shift) {
  ZPoly out(shift + (k + 1) * (d.size() - 1) + 1, 0);
  for (std::size_t l = 0; l < d.size(); ++l) out[shift + (k + 1) * l] = d[l];
  return out;
}

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Entry (row, col) of the level matrix I - zA as {constant, z-coefficient};
// rows and columns are indexed by level + t.
struct Entry {
  long c0 = 0;
  long c1 = 0;
};

Entry matrix_entry(const StripSpec& s, int row, int col) {
  Entry e;
  if (row == col) e.c0 = 1;
  if (col == row - 1) e.c1 = -1;
  if (col == row + s.k) e.c1 = -1;
  return e;
}

}  // namespace

void StripSpec::validate() const {
  if (k < 1 || t < 0 || h < 0 || i < -t || i > h || max_length < 0)
    throw std::invalid_argument("strip spec needs k >= 1, t >= 0, h >= 0, -t <= i <= h, max_length >= 0");
}

mpz_class OffsetSeries::at_length(long length) const {
  long rest = length - offset;
  if (rest < 0 || rest % (k + 1) != 0) return 0;
  const auto n = static_cast<std::size_t>(rest / (k + 1));
  if (n > x_series.order()) throw std::out_of_range("length beyond series order");
  return x_series[n];
}

std::vector<mpz_class> OffsetSeries::by_length(int max_length) const {
  std::vector<mpz_class> out(max_length + 1, 0);
  for (int len = 0; len <= max_length; ++len) out[len] = at_length(len);
  return out;
}

LengthCounts phi_series_dp(const StripSpec& spec) {
  spec.validate();
  const int lo = -spec.t, w = spec.width();
  std::vector<mpz_class> cur(w, 0), next(w, 0);
  cur[-lo] = 1;
  LengthCounts out(spec.max_length + 1, 0);
  for (int len = 0; len <= spec.max_length; ++len) {
    out[len] = cur[spec.i - lo];
    for (auto& v : next) v = 0;
    for (int idx = 0; idx < w; ++idx) {
      if (cur[idx] == 0) continue;
      if (idx + 1 < w) next[idx + 1] += cur[idx];
      if (idx - spec.k >= 0) next[idx - spec.k] += cur[idx];
    }
    std::swap(cur, next);
  }
  return out;
}

// Laplace expansion row by row, memoised on the set of columns already used.
// Each row has at most four nonzero entries, so the number of live column
// sets stays small for banded matrices.
std::vector<mpz_class> cramer_numerator(const StripSpec& spec) {
  spec.validate();
  const int m = spec.width();
  if (m > 64) throw std::invalid_argument("cramer_numerator supports strips of at most 64 levels");
  const int row0 = spec.t;           // equation for level 0
  const int jcol = spec.i + spec.t;  // unknown being solved for

  std::map<std::uint64_t, ZPoly> states{{0, ZPoly{1}}};
  for (int row = 0; row < m; ++row) {
    std::map<std::uint64_t, ZPoly> next;
    for (const auto& [used, poly] : states) {
      std::vector<int> cols{row - 1, row, row + spec.k};
      if (jcol != row - 1 && jcol != row && jcol != row + spec.k) cols.push_back(jcol);
      for (int col : cols) {
        if (col < 0 || col >= m || (used >> col) & 1u) continue;
        Entry e;
        if (col == jcol) {
          if (row != row0) continue;
          e.c0 = 1;
        } else {
          e = matrix_entry(spec, row, col);
        }
        if (e.c0 == 0 && e.c1 == 0) continue;
        const int inversions = std::popcount(used >> (col + 1));
        const long sign = inversions % 2 ? -1 : 1;
        ZPoly term(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
          term[d] += poly[d] * (sign * e.c0);
          term[d + 1] += poly[d] * (sign * e.c1);
        }
        ZPoly& slot = next[used | (std::uint64_t{1} << col)];
        if (slot.size() < term.size()) slot.resize(term.size(), 0);
        for (std::size_t d = 0; d < term.size(); ++d) slot[d] += term[d];
      }
    }
    states = std::move(next);
  }
  ZPoly det = states.empty() ? ZPoly{0} : states.begin()->second;
  while (det.size() > 1 && det.back() == 0) det.pop_back();
  return det;
}

bool product_form_applies(const StripSpec& spec) { return spec.i >= 0 || spec.k == 1; }

std::vector<mpz_class> cramer_product_numerator(const StripSpec& spec) {
  spec.validate();
  const int k = spec.k;
  if (spec.i >= 0)
    return poly_mul(x_to_z(d_poly(k, spec.t).coeffs, k, 0), x_to_z(d_poly(k, spec.h - spec.i).coeffs, k, spec.i));
  const int below = -spec.i;
  return poly_mul(x_to_z(d_poly(k, spec.h).coeffs, k, 0), x_to_z(d_poly(k, spec.t - below).coeffs, k, below));
}

LengthCounts phi_series_cramer(const StripSpec& spec) {
  spec.validate();
  const std::size_t order = spec.max_length;
  const ZPoly num = product_form_applies(spec) ? cramer_product_numerator(spec) : cramer_numerator(spec);
  const Series den = Series::from_poly(x_to_z(d_poly(spec.k, spec.width()).coeffs, spec.k, 0), order);
  const Series phi = mul(Series::from_poly(num, order), reciprocal(den));
  return phi.coeffs();
}

OffsetSeries phi_limit_h(int k, int t, int i, std::size_t order) {
  if (k < 1 || t < 0 || i < 0) throw std::invalid_argument("phi_limit_h needs k >= 1, t >= 0, i >= 0");
  const Series d = Series::from_poly(d_poly(k, t).coeffs, order);
  const Series y = solve_y(k, order).series;
  return {k, i, mul(d, pow(y, static_cast<unsigned>(i + t + 1)))};
}

Series g_series(int k, int t, std::size_t order) {
  if (k < 1 || t < 0) throw std::invalid_argument("g_series needs k >= 1, t >= 0");
  return mul(Series::from_poly(d_poly(k, t).coeffs, order), pow(solve_y(k, order).series, static_cast<unsigned>(t + 1)));
}

}  // namespace kdyck
