// Runs the randomized invariant suite at full case count.

#include "doctest.h"

#include "property_suite.hpp"

TEST_CASE("randomized invariants hold") {
  const auto results = propsuite::run_property_suite(1000);
  REQUIRE(results.size() == 6);
  for (const propsuite::PropertyResult &r : results) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.failures == 0);
    CHECK(r.cases > 0);
    // Skips must stay a sliver of the workload, or the property is not
    // really being exercised.
    CHECK(r.skipped * 20 <= r.cases);
  }
}
