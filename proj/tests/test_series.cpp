#include "doctest.h"

#include "kdyck/closed_forms.hpp"
#include "kdyck/series.hpp"

using kdyck::Series;

TEST_CASE("solve_y") {
  CHECK(kdyck::solve_y(1, 4).series == Series(4, {1, 1, 2, 5, 14}));
  CHECK(kdyck::solve_y(2, 2).series == Series(2, {1, 1, 3}));
  for (int k = 1; k <= 4; ++k) CHECK(kdyck::solve_y(k, 0).series == Series(0, {1}));
}

TEST_CASE("solve_y satisfies its defining equation") {
  for (int k = 1; k <= 4; ++k) {
    const Series y = kdyck::solve_y(k, 15).series;
    const Series rhs_tail = kdyck::pow(y, k + 1);
    CHECK(y[0] == 1);
    for (std::size_t n = 1; n <= 15; ++n) CHECK(y[n] == rhs_tail[n - 1]);
  }
}

TEST_CASE("arithmetic") {
  const Series geo = kdyck::reciprocal(Series(6, {1, -1}));
  CHECK(geo == Series(6, {1, 1, 1, 1, 1, 1, 1}));
  CHECK(kdyck::pow(kdyck::solve_y(1, 3).series, 2) == Series(3, {1, 2, 5, 14}));
  const Series a(8, {1, 3, -2, 7, 0, 5});
  CHECK(kdyck::mul(a, kdyck::reciprocal(a)) == Series::one(8));
  CHECK(kdyck::reciprocal(Series(3, {-1, 1})) == Series(3, {-1, -1, -1, -1}));
  CHECK_THROWS_AS(kdyck::reciprocal(Series(3, {2, 1})), std::domain_error);
  CHECK(kdyck::pow(a, 0) == Series::one(8));
}

TEST_CASE("mixed orders truncate to the smaller one") {
  const Series a(5, {1, 1});
  const Series b(2, {1, 2, 3});
  CHECK(kdyck::mul(a, b).order() == 2);
  CHECK((a + b).order() == 2);
  CHECK((a - b) == Series(2, {0, -1, -3}));
  CHECK_THROWS(a.truncate(7));
}

TEST_CASE("powers of y match the Lagrange coefficients") {
  for (int k = 1; k <= 4; ++k) {
    const Series y = kdyck::solve_y(k, 18).series;
    for (int j = 1; j <= 7; ++j) {
      const Series yj = kdyck::pow(y, j);
      for (long n = 0; n <= 18; ++n) CHECK(yj[n] == kdyck::ycoeff(k, j, n));
    }
  }
}

TEST_CASE("coefficients beyond 64 bits") {
  // C_40 = 2622127042276492108820, well past 2^64.
  CHECK(kdyck::solve_y(1, 40).series[40] == mpz_class("2622127042276492108820"));
}

TEST_CASE("bivariate numerator") {
  auto b2 = kdyck::bivariate_numerator(2, 6);
  CHECK(b2.row(2) == std::vector<mpz_class>{6, 2, 1});
  CHECK(b2.at(2, 5) == 0);
  auto b0 = kdyck::bivariate_numerator(0, 6);
  const Series cat = kdyck::solve_y(1, 6).series;
  for (std::size_t n = 0; n <= 6; ++n) {
    auto row = b0.row(n);
    CHECK(row[0] == cat[n]);
    for (std::size_t s = 1; s <= n; ++s) CHECK(row[s] == 0);
  }
  auto b1 = kdyck::bivariate_numerator(1, 4);
  CHECK(b1.row(1) == std::vector<mpz_class>{2, 0});
  auto m = b2.matrix();
  CHECK(m.size() == 7);
  CHECK(m[2][0] == 6);
  CHECK(m[1][2] == 0);
}

TEST_CASE("bivariate numerator rows sum to [x^n] C^{t+1}") {
  for (int t = 0; t <= 7; ++t) {
    auto b = kdyck::bivariate_numerator(t, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      mpz_class sum = 0;
      for (const auto& v : b.row(n)) sum += v;
      CHECK(sum == kdyck::ycoeff(1, t + 1, static_cast<long>(n)));
    }
  }
}
