#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "kdyck/series.hpp"

namespace kdyck {

/// Paths from level 0 confined to [-t, h] and ending on level i.
struct StripSpec {
  int k = 1;
  int t = 0;
  int h = 0;
  int i = 0;
  int max_length = 0;  // counts are reported for lengths 0..max_length

  int width() const { return h + t + 1; }
  void validate() const;
};

/// A series in x = z^{k+1} shifted by a fixed number of steps: the
/// coefficient of x^n counts objects of length offset + (k+1)n.
struct OffsetSeries {
  int k;
  int offset;
  Series x_series;

  mpz_class at_length(long length) const;
  std::vector<mpz_class> by_length(int max_length) const;
};

/// Counts indexed by step count.
using LengthCounts = std::vector<mpz_class>;

/// Forward transfer over the levels of the strip.
LengthCounts phi_series_dp(const StripSpec& spec);

/// Expansion of numerator / D_{h+t+1} where the numerator comes from
/// Cramer's rule on the level system.
LengthCounts phi_series_cramer(const StripSpec& spec);

/// Cramer numerator as a polynomial in z, from the determinant of the level
/// matrix with the end-level column replaced by the unit vector at level 0.
std::vector<mpz_class> cramer_numerator(const StripSpec& spec);

/// True when the numerator factors as D_t z^i D_{h-i} (i >= 0) or
/// D_h z^{|i|} D_{t-|i|} (i < 0). The latter only holds for k = 1.
bool product_form_applies(const StripSpec& spec);

/// The factored numerator as a polynomial in z.
std::vector<mpz_class> cramer_product_numerator(const StripSpec& spec);

/// h -> infinity: D_t z^i y^{i+t+1}, series order `order` in x.
OffsetSeries phi_limit_h(int k, int t, int i, std::size_t order);

/// Paths bounded below by -t, no upper bound, ending on level 0, by x-degree:
/// G = D_t y^{t+1}.
Series g_series(int k, int t, std::size_t order);

}  // namespace kdyck
