#include "doctest.h"

#include <functional>
#include <set>

#include "kdyck/bijections.hpp"
#include "kdyck/brute_force.hpp"
#include "kdyck/closed_forms.hpp"

using kdyck::Path;
using kdyck::TupleDecomposition;
namespace brute = kdyck::brute;

namespace {

Path P(const char* s, int k) { return Path::parse(s, k); }

TupleDecomposition tup(int k, std::initializer_list<const char*> parts) {
  TupleDecomposition t{k, {}};
  for (const char* p : parts) t.parts.push_back(P(p, k));
  return t;
}

// k = 3 example paths drawn in the figures.
const char* kBounded = "UDUUUDUUUUDUDUUUUUUUDUUUUUDD";
const char* kEndsAtThree = "UUUDUUUUUDUUUDUUDUUUUDUUUUDUUUDUUUD";

}  // namespace

TEST_CASE("lift_prepend") {
  CHECK(kdyck::lift_prepend(P("DU", 1), 1).str() == "UDU");
  CHECK(kdyck::lift_prepend(P("", 2), 2).str() == "UU");
  const Path lifted = kdyck::lift_prepend(P(kBounded, 3), 3);
  CHECK(lifted.str() == std::string("UUU") + kBounded);
  CHECK(kdyck::is_nonnegative(lifted));
  CHECK(lifted.end_level() == 3);
  CHECK_THROWS_AS(kdyck::lift_prepend(P("DU", 1), 0), std::invalid_argument);
}

TEST_CASE("decompose_last_visits") {
  CHECK(kdyck::decompose_last_visits(P("UDU", 1), 1) == tup(1, {"UD", ""}));
  CHECK(kdyck::decompose_last_visits(P("UUD", 1), 1) == tup(1, {"", "UD"}));

  const auto fig = kdyck::decompose_last_visits(kdyck::lift_prepend(P(kBounded, 3), 3), 3);
  CHECK(fig == tup(3, {"UUUUDUUUDUUUUDUD", "", "", "UUUUDUUUUUDD"}));

  CHECK_THROWS_AS(kdyck::decompose_last_visits(P("UD", 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::decompose_last_visits(P("DUU", 1), 1), std::invalid_argument);
}

TEST_CASE("second figure example") {
  const Path q = P(kEndsAtThree, 3);
  CHECK(q.size() == 35);
  CHECK(q.end_level() == 3);
  const auto parts = kdyck::decompose_last_visits(q, 3);
  CHECK(parts == tup(3, {"UUUD", "UUUUDUUUDUUD", "UUUD", "UUUDUUUDUUUD"}));
  CHECK(kdyck::compose(parts) == q);
}

TEST_CASE("compose") {
  CHECK(kdyck::compose(tup(1, {"UD", ""})).str() == "UDU");
  CHECK(kdyck::compose(tup(2, {"", "", "", ""})).str() == "UUU");
  CHECK_THROWS_AS(kdyck::compose(tup(1, {"DU", ""})), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::compose(TupleDecomposition{1, {}}), std::invalid_argument);
}

TEST_CASE("to_tuple / from_tuple") {
  CHECK(kdyck::to_tuple(P("DU", 1), 1) == tup(1, {"UD", ""}));
  CHECK(kdyck::to_tuple(P("UD", 1), 1) == tup(1, {"", "UD"}));
  CHECK(kdyck::to_tuple(P("", 2), 2) == tup(2, {"", "", ""}));
  CHECK(kdyck::from_tuple(tup(2, {"", "", ""})).empty());
  CHECK(kdyck::from_tuple(tup(1, {"UD", ""})).str() == "DU");
  CHECK_THROWS_AS(kdyck::to_tuple(P("UD", 1), 2), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::from_tuple(tup(1, {"", "", ""})), std::invalid_argument);
  CHECK_THROWS_AS(kdyck::to_tuple(P("DDUUUU", 2), 1), std::invalid_argument);
}

TEST_CASE("round trip and cardinality, exhaustively") {
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t <= k; ++t)
      for (int n = 0; n <= 4; ++n) {
        std::set<std::vector<std::string>> images;
        long count = 0;
        for (const Path& p : brute::enumerate_kt({k, t, n, {}, {}})) {
          const auto parts = kdyck::to_tuple(p, t);
          REQUIRE(parts.parts.size() == static_cast<std::size_t>(t + 1));
          for (const auto& part : parts.parts) CHECK(kdyck::is_kt_dyck(part, 0));
          CHECK(parts.total_length() == p.size());
          CHECK(kdyck::from_tuple(parts) == p);
          std::vector<std::string> key;
          for (const auto& part : parts.parts) key.push_back(part.str());
          images.insert(key);
          ++count;
        }
        CHECK(images.size() == static_cast<std::size_t>(count));
        CHECK(kdyck::ycoeff(k, t + 1, n) == count);
      }
}

TEST_CASE("every tuple comes from a path") {
  // Build all (t+1)-tuples of k-Dyck paths of total length (k+1)n from the
  // enumerated k-Dyck paths and map them back.
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t <= k; ++t)
      for (int n = 0; n <= 3; ++n) {
        std::vector<std::vector<Path>> dyck(n + 1);
        for (int j = 0; j <= n; ++j) dyck[j] = brute::enumerate_kt({k, 0, j, {}, {}});
        long tuples = 0;
        std::vector<Path> cur;
        std::function<void(int, int)> build = [&](int slot, int left) {
          if (slot == t) {
            for (const Path& last : dyck[left]) {
              cur.push_back(last);
              TupleDecomposition T{k, cur};
              const Path p = kdyck::from_tuple(T);
              CHECK(kdyck::is_kt_dyck(p, t));
              CHECK(kdyck::to_tuple(p, t) == T);
              ++tuples;
              cur.pop_back();
            }
            return;
          }
          for (int j = 0; j <= left; ++j)
            for (const Path& part : dyck[j]) {
              cur.push_back(part);
              build(slot + 1, left - j);
              cur.pop_back();
            }
        };
        build(0, n);
        CHECK(kdyck::ycoeff(k, t + 1, n) == tuples);
      }
}

TEST_CASE("split_fg") {
  auto s = kdyck::split_fg(P("UDUU", 1), 2);
  CHECK(s.f.str() == "UDUU");
  CHECK(s.g.empty());
  auto s2 = kdyck::split_fg(P("UUUDUD", 1), 2);
  CHECK(s2.f.str() == "UU");
  CHECK(s2.g.str() == "UDUD");
  CHECK_THROWS_AS(kdyck::split_fg(P("UD", 1), 2), std::invalid_argument);
  CHECK(kdyck::split_fg(P("UD", 1), 0).f.empty());
}

TEST_CASE("split_fg invariants over all non-negative paths ending at t") {
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t <= 5; ++t)
      for (int len = t; len <= t + 4 * (k + 1); len += k + 1)
        brute::for_each_nonnegative(k, len, t, [&](const Path& q) {
          const auto fg = kdyck::split_fg(q, t);
          Path joined = fg.f;
          joined.append(fg.g);
          CHECK(joined == q);
          CHECK((static_cast<long>(fg.f.size()) - t) % (k + 1) == 0);
          if (t > 0) {
            CHECK(fg.f[fg.f.size() - 1] == kdyck::Step::Up);
            const auto prof = kdyck::level_profile(fg.f.slice(0, fg.f.size() - 1));
            for (auto lv : prof) CHECK((lv >= 0 && lv <= t - 1));
          }
          // g starts on level t and stays non-negative in absolute terms.
          CHECK(kdyck::min_level(fg.g) >= -t);
          if (t <= k) CHECK(fg.f == kdyck::ups(k, t));
        });
}
