#include "kdyck/distribution.hpp"

#include <algorithm>
#include <stdexcept>

#include "kdyck/closed_forms.hpp"
#include "kdyck/series.hpp"

namespace kdyck {
namespace {

constexpr long kMaxAutoTruncation = 1'000'000;

DistributionTable finite_from(const BivariateNumerator& num, long n) {
  DistributionTable d;
  d.t = num.t();
  d.n = n;
  d.total = ycoeff(1, num.t() + 1, n);
  d.counts = num.row(static_cast<std::size_t>(n));
  for (const auto& c : d.counts) {
    mpq_class q(c, d.total);
    q.canonicalize();
    d.masses.push_back(q);
  }
  return d;
}

}  // namespace

mpq_class DistributionTable::mean_s() const {
  mpq_class m = 0;
  for (std::size_t s = 0; s < masses.size(); ++s) m += masses[s] * static_cast<long>(s);
  return m;
}

DistributionTable finite_dist(int t, long n) {
  if (t < 0 || n < 0) throw std::invalid_argument("finite_dist needs t >= 0, n >= 0");
  return finite_from(bivariate_numerator(t, static_cast<std::size_t>(n)), n);
}

DistributionTable limit_dist(int t, long max_s) {
  if (t < 0 || max_s < 0) throw std::invalid_argument("limit_dist needs t >= 0, max_s >= 0");
  DistributionTable d;
  d.t = t;
  d.residual = 1;
  for (long m = 0; m <= max_s; ++m) {
    d.masses.push_back(limit_dist_mass(t, m));
    d.residual -= d.masses.back();
  }
  return d;
}

DistributionTable limit_dist(int t) {
  if (t < 0) throw std::invalid_argument("limit_dist needs t >= 0");
  const mpq_class tolerance(1, mpz_class("1000000000000"));
  DistributionTable d;
  d.t = t;
  d.residual = 1;
  for (long m = 0; m <= kMaxAutoTruncation; ++m) {
    d.masses.push_back(limit_dist_mass(t, m));
    d.residual -= d.masses.back();
    if (d.residual < tolerance) return d;
  }
  throw std::runtime_error("limit_dist: residual did not drop below 1e-12");
}

std::vector<std::pair<long, mpq_class>> mean_convergence(int t, const std::vector<long>& ns) {
  if (t < 0) throw std::invalid_argument("mean_convergence needs t >= 0");
  std::vector<std::pair<long, mpq_class>> out;
  if (ns.empty()) return out;
  const long top = *std::max_element(ns.begin(), ns.end());
  if (*std::min_element(ns.begin(), ns.end()) < 0) throw std::invalid_argument("mean_convergence needs n >= 0");
  const BivariateNumerator num = bivariate_numerator(t, static_cast<std::size_t>(top));
  for (long n : ns) out.emplace_back(n, finite_from(num, n).mean_j());
  return out;
}

}  // namespace kdyck
