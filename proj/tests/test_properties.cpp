#include <doctest.h>

#include "support/properties.hpp"

TEST_CASE("randomized property suites") {
  for (const props::SuiteResult& r : props::all_suites(1000, 20261015)) {
    INFO(r.name << ": " << r.failures << "/" << r.cases << " failed; first: " << r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.ok());
  }
}
