#include "doctest.h"

#include "kdyck/verify.hpp"

TEST_CASE("quick verification profile passes") {
  const auto results = kdyck::verify::run(kdyck::verify::Profile::Quick);
  CHECK(results.size() == 9);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}
