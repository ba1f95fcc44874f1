#include "kdyck/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "kdyck/bijections.hpp"
#include "kdyck/brute_force.hpp"
#include "kdyck/closed_forms.hpp"
#include "kdyck/distribution.hpp"
#include "kdyck/series.hpp"
#include "kdyck/strip.hpp"

namespace kdyck::verify {
namespace {

// Collects mismatches for one named check; the first few are kept as detail.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    if (failures_++ < 3) detail_ << (failures_ > 1 ? "; " : "") << what();
  }

  CheckResult result() const {
    std::ostringstream d;
    if (failures_ == 0)
      d << cases_ << " cases";
    else
      d << failures_ << "/" << cases_ << " failed: " << detail_.str();
    return {name_, failures_ == 0, d.str()};
  }

 private:
  std::string name_;
  long cases_ = 0;
  long failures_ = 0;
  std::ostringstream detail_;
};

std::string key(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream s;
  for (auto [name, v] : kv) s << name << "=" << v << " ";
  return s.str();
}

CheckResult check_counts(int cap) {
  Tally tally("counts: closed form = D_t y^{t+1} series = enumeration");
  for (int k = 1; k <= 3; ++k) {
    const Series y = solve_y(k, 5).series;
    for (int t = 0; t <= 6; ++t) {
      const Series gf = mul(Series::from_poly(d_poly(k, t).coeffs, 5), pow(y, t + 1));
      for (int n = 0; n <= 5 && (k + 1) * n <= std::min(cap, 24); ++n) {
        const mpz_class formula = count_general(k, t, n);
        const mpz_class brute = brute::enumerate_kt({k, t, n, {}, {}}, cap).size();
        tally.expect(formula == gf[n] && formula == brute, [&] {
          return key({{"k", k}, {"t", t}, {"n", n}}) + "formula=" + formula.get_str() +
                 " series=" + gf[n].get_str() + " brute=" + brute.get_str();
        });
        if (t <= k)
          tally.expect(count_simple(k, t, n) == formula, [&] { return key({{"k", k}, {"t", t}, {"n", n}}) + "simple"; });
      }
    }
  }
  return tally.result();
}

CheckResult check_dpoly() {
  Tally tally("D_m: binomial sum = recurrence");
  for (int k = 1; k <= 5; ++k)
    for (int m = 0; m <= 40; ++m) {
      tally.expect(d_poly_explicit(k, m) == d_poly_recursive(k, m), [&] { return key({{"k", k}, {"m", m}}); });
      if (m <= k) {
        const auto c = d_poly_explicit(k, m).coeffs;
        tally.expect(c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](const mpz_class& v) { return v == 0; }),
                     [&] { return key({{"k", k}, {"m", m}}) + "!= 1"; });
      }
    }
  return tally.result();
}

CheckResult check_series() {
  Tally tally("series: y and y^j against the Lagrange coefficients");
  for (int k = 1; k <= 4; ++k) {
    const Series y = solve_y(k, 20).series;
    for (int j = 1; j <= 6; ++j) {
      const Series yj = pow(y, j);
      for (int n = 0; n <= 20; ++n)
        tally.expect(yj[n] == ycoeff(k, j, n), [&] { return key({{"k", k}, {"j", j}, {"n", n}}); });
    }
  }
  return tally.result();
}

CheckResult check_bijection(int cap) {
  Tally tally("bijection: k_t paths <-> (t+1)-tuples");
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t <= k; ++t)
      for (int n = 0; n <= 4 && (k + 1) * n <= cap; ++n) {
        long seen = 0;
        for (const Path& p : brute::enumerate_kt({k, t, n, {}, {}}, cap)) {
          const TupleDecomposition tup = to_tuple(p, t);
          bool ok = static_cast<int>(tup.parts.size()) == t + 1 && tup.total_length() == p.size() &&
                    from_tuple(tup) == p && to_tuple(from_tuple(tup), t) == tup;
          tally.expect(ok, [&] { return key({{"k", k}, {"t", t}}) + p.str(); });
          ++seen;
        }
        tally.expect(ycoeff(k, t + 1, n) == seen, [&] { return key({{"k", k}, {"t", t}, {"n", n}}) + "cardinality"; });
      }
  return tally.result();
}

CheckResult check_strip() {
  Tally tally("strip: transfer DP = Cramer quotient = level recurrence");
  for (int k = 1; k <= 2; ++k)
    for (int t = 0; t <= 4; ++t)
      for (int h = 0; h <= 4; ++h)
        for (int i = -t; i <= h; ++i) {
          const StripSpec spec{k, t, h, i, 16};
          const LengthCounts dp = phi_series_dp(spec);
          const LengthCounts cr = phi_series_cramer(spec);
          for (int len = 0; len <= 16; ++len) {
            const mpz_class rec = brute::count_strip({k, t, 0, h, i}, len);
            tally.expect(dp[len] == cr[len] && dp[len] == rec, [&] {
              return key({{"k", k}, {"t", t}, {"h", h}, {"i", i}, {"len", len}});
            });
          }
        }
  return tally.result();
}

CheckResult check_f_parts(int cap) {
  Tally tally("F parts: coefficients of 1/D_t = first-arrival enumeration");
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t <= 6; ++t) {
      const auto f = f_part_counts(k, t, 4);
      for (int l = 0; l <= 4; ++l) {
        const int len = t + (k + 1) * l;
        if (len > cap) break;
        tally.expect(f[l] == brute::count_first_arrival(k, t, len, cap),
                     [&] { return key({{"k", k}, {"t", t}, {"l", l}}); });
      }
    }
  return tally.result();
}

CheckResult check_finite_dist(int cap) {
  Tally tally("k=1 finite law of J = exhaustive histogram");
  for (int t = 0; t <= 4; ++t)
    for (int n = 0; n <= 6 && 2 * n + t <= cap; ++n) {
      const DistributionTable d = finite_dist(t, n);
      const auto hist = brute::j_histogram(t, n, cap);
      mpq_class sum = 0;
      for (std::size_t s = 0; s < d.masses.size(); ++s) {
        auto it = hist.find(static_cast<int>(s));
        const mpz_class c = it == hist.end() ? mpz_class(0) : it->second;
        mpq_class expect(c, d.total);
        expect.canonicalize();
        tally.expect(d.masses[s] == expect, [&] { return key({{"t", t}, {"n", n}, {"s", static_cast<long>(s)}}); });
        sum += d.masses[s];
      }
      tally.expect(sum == 1, [&] { return key({{"t", t}, {"n", n}}) + "sum != 1"; });
    }
  return tally.result();
}

CheckResult check_limit_law() {
  Tally tally("k=1 limit law: normalisation and t=2 geometric masses");
  for (int t = 0; t <= 10; ++t) {
    const DistributionTable d = limit_dist(t);
    tally.expect(d.residual >= 0 && d.residual < mpq_class(1, 1000000) / 1000000,
                 [&] { return key({{"t", t}}) + "residual"; });
  }
  mpq_class geometric(3, 4);
  for (int m = 0; m <= 30; ++m) {
    tally.expect(limit_dist_mass(2, m) == geometric, [&] { return key({{"m", m}}); });
    geometric /= 4;
  }
  return tally.result();
}

CheckResult check_ratio_limit() {
  Tally tally("ratio limit = 1 for t <= k");
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t <= k; ++t) {
      const RatioReport r = ratio_report(k, t, 5);
      bool ok = r.limit == 1 && std::all_of(r.quotients.begin(), r.quotients.end(), [](const mpq_class& q) { return q == 1; });
      tally.expect(ok, [&] { return key({{"k", k}, {"t", t}}); });
    }
  return tally.result();
}

}  // namespace

std::vector<CheckResult> run(Profile profile) {
  const int cap = profile == Profile::Quick ? 20 : brute::step_limit();
  return {
      check_counts(cap),      check_dpoly(),         check_series(),       check_bijection(cap),
      check_strip(),          check_f_parts(cap),    check_finite_dist(cap), check_limit_law(),
      check_ratio_limit(),
  };
}

}  // namespace kdyck::verify
