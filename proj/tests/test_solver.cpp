// The closed-form 2x2 normal-equation solver: planted-coefficient
// recovery, the rank-deficiency guard and its scale invariance.

#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "greysd/errors.hpp"
#include "greysd/solver.hpp"
#include "support.hpp"

using namespace greysd;
using testutil::contains;
using testutil::rel_err;
using testutil::thrown_message;

TEST_CASE("solver recovers planted coefficients") {
  std::vector<LsRow> rows;
  for (int i = 0; i < 6; ++i) {
    const double c1 = 1.0 + 0.37 * i;
    const double c2 = 1.0 - 0.05 * i;
    rows.push_back({c1, c2, 2.5 * c1 - 1.25 * c2});
  }
  const auto [u, v] = solve_normal_2x2(rows, "probe");
  CHECK(rel_err(u, 2.5) <= 1e-13);
  CHECK(rel_err(v, -1.25) <= 1e-13);
}

TEST_CASE("solver needs at least two rows") {
  CHECK_THROWS_AS(solve_normal_2x2({{1.0, 1.0, 1.0}}, "probe"),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_normal_2x2({}, "probe"), std::invalid_argument);
}

TEST_CASE("proportional design columns raise the degeneracy error") {
  const std::vector<LsRow> rows(5, LsRow{2.0, 2.0, 1.0});
  const std::string msg = thrown_message<DegenerateDataError>(
      [&] { solve_normal_2x2(rows, "probe"); });
  CHECK(contains(msg, "probe"));
  CHECK(contains(msg, "singular"));
}

TEST_CASE("a numerically constant column is degenerate") {
  // The first column varies only in the last few bits relative to its
  // magnitude; the relative determinant guard must reject it.
  std::vector<LsRow> rows;
  for (int i = 0; i < 4; ++i)
    rows.push_back({1e16 + i, 1.0, 1.0 + i});
  CHECK_THROWS_AS(solve_normal_2x2(rows, "gm11"), DegenerateDataError);
}

TEST_CASE("the determinant guard is invariant under rescaling") {
  for (const double s : {1e-8, 1.0, 1e8}) {
    std::vector<LsRow> rows;
    for (int i = 0; i < 5; ++i) {
      const double c1 = s * (1.0 + i);
      const double c2 = s;
      rows.push_back({c1, c2, 3.0 * c1 + 2.0 * c2});
    }
    const auto [u, v] = solve_normal_2x2(rows, "probe");
    CHECK(rel_err(u, 3.0) <= 1e-12);
    CHECK(rel_err(v, 2.0) <= 1e-12);
  }
}
