#include "doctest.h"

#include "kdyck/paths.hpp"
#include "oracle.hpp"

using kdyck::Path;

namespace {

// Figure path for k = 3, t = 3 (28 steps) as a list of levels after each step.
const std::vector<std::int64_t> kFigureLevels = {1, -2, -1, 0, 1, -2, -1, 0, 1, 2, -1, 0, -3, -2,
                                                 -1, 0, 1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 3, 0};
const char* kFigurePath = "UDUUUDUUUUDUDUUUUUUUDUUUUUDD";

}  // namespace

TEST_CASE("parse and print round trip") {
  Path p = Path::parse("UUDUD", 2);
  CHECK(p.str() == "UUDUD");
  CHECK(p.size() == 5);
  CHECK(p.up_count() == 3);
  CHECK(p.down_count() == 2);
  CHECK(p.end_level() == -1);
  CHECK(Path::parse("", 1).empty());
}

TEST_CASE("parse rejects foreign characters") {
  CHECK_THROWS_AS(Path::parse("UDx", 1), kdyck::ParseError);
  CHECK_THROWS_AS(Path::parse("ud", 1), kdyck::ParseError);
  CHECK_THROWS_AS(Path::parse("U D", 1), kdyck::ParseError);
  CHECK_THROWS_AS(Path(0), std::invalid_argument);
}

TEST_CASE("level_profile") {
  CHECK(kdyck::level_profile(Path::parse("UD", 1)) == std::vector<std::int64_t>{1, 0});
  CHECK(kdyck::level_profile(Path::parse("UDU", 3)) == std::vector<std::int64_t>{1, -2, -1});
  CHECK(kdyck::level_profile(Path::parse("", 3)).empty());

  Path fig = Path::parse(kFigurePath, 3);
  auto prof = kdyck::level_profile(fig);
  CHECK(prof == kFigureLevels);
  CHECK(kdyck::min_level(fig) == -3);
  CHECK(prof.back() == 0);
  CHECK(kdyck::is_kt_dyck(fig, 3));
  CHECK_FALSE(kdyck::is_kt_dyck(fig, 2));
}

TEST_CASE("is_kt_dyck") {
  CHECK(kdyck::is_kt_dyck(Path::parse("DU", 1), 1));
  CHECK_FALSE(kdyck::is_kt_dyck(Path::parse("DU", 1), 0));
  CHECK_FALSE(kdyck::is_kt_dyck(Path::parse("UDDUUU", 2), 1));
  for (int t = 0; t < 5; ++t) CHECK(kdyck::is_kt_dyck(Path(2), t));
  CHECK_FALSE(kdyck::is_kt_dyck(Path::parse("UU", 1), 5));
}

TEST_CASE("parameter_j") {
  CHECK(kdyck::parameter_j(Path::parse("UU", 1), 2) == 2);
  CHECK(kdyck::parameter_j(Path::parse("UDUU", 1), 2) == 4);
  CHECK(kdyck::parameter_j(Path::parse("UUDD", 1), 2) == 2);
  CHECK(kdyck::parameter_j(Path::parse("UDUD", 1), 0) == 0);
  CHECK_THROWS_AS(kdyck::parameter_j(Path::parse("UDU", 1), 2), std::invalid_argument);
}

TEST_CASE("properties over every word up to length 12") {
  for (int k = 1; k <= 3; ++k)
    for (int len = 0; len <= 12; ++len)
      for (const auto& w : oracle::all_words(len)) {
        Path p = Path::parse(w, k);
        const auto lv = oracle::levels(w, k);
        CHECK(p.end_level() == p.up_count() - k * p.down_count());
        CHECK(kdyck::level_profile(p) == std::vector<std::int64_t>(lv.begin(), lv.end()));
        for (int t = 0; t <= 4; ++t) {
          if (!kdyck::is_kt_dyck(p, t)) continue;
          CHECK(p.size() % (k + 1) == 0);
          for (int t2 = t; t2 <= 6; ++t2) CHECK(kdyck::is_kt_dyck(p, t2));
        }
        if (kdyck::is_nonnegative(p) && p.end_level() > 0) {
          for (int t = 1; t <= p.end_level(); ++t) CHECK((kdyck::parameter_j(p, t) - t) % (k + 1) == 0);
        }
      }
}
