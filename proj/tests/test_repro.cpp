// The reference-table reproduction harness.  Six of the seven tables
// must reproduce fully; the third is expected to fail on a known data
// revision, and those failures are part of the contract: they must
// appear, with exactly the observed shape, rather than be patched over.

#include <cstddef>
#include <string>
#include <vector>

#include "doctest.h"

#include "greysd/errors.hpp"
#include "greysd/models.hpp"
#include "greysd/repro.hpp"
#include "support.hpp"

using namespace greysd;
using testutil::contains;
using testutil::rel_err;
using testutil::thrown_message;

namespace {

std::size_t count_status(const repro::TableReport &t,
                         repro::CellStatus status) {
  std::size_t n = 0;
  for (const repro::CellCheck &c : t.cells)
    if (c.status == status)
      ++n;
  return n;
}

const repro::CellCheck *find_cell(const repro::TableReport &t,
                                  const std::string &row,
                                  const std::string &column) {
  for (const repro::CellCheck &c : t.cells)
    if (c.row == row && c.column == column)
      return &c;
  return nullptr;
}

} // namespace

TEST_CASE("the full reproduction run has the expected shape") {
  const std::vector<repro::TableReport> reports = repro::run_all();
  REQUIRE(reports.size() == 7);
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(reports[i].table_id == static_cast<int>(i) + 1);

  struct Shape {
    std::size_t cells, hard, failures, informational, errata;
  };
  const Shape want[7] = {
      {21, 21, 0, 0, 0},  // inconsistency gauge grid
      {66, 66, 0, 0, 0},  // doubling series
      {62, 49, 31, 13, 0}, // electricity (known data revision)
      {60, 48, 0, 12, 0},  // gdp values
      {60, 44, 0, 15, 1},  // gdp percentage errors
      {55, 44, 0, 11, 0},  // freightage values
      {56, 41, 0, 14, 1}}; // freightage percentage errors
  for (std::size_t i = 0; i < 7; ++i) {
    CAPTURE(i + 1);
    const repro::TableReport &t = reports[i];
    CHECK(t.cells.size() == want[i].cells);
    CHECK(t.hard_cells() == want[i].hard);
    CHECK(t.hard_failures() == want[i].failures);
    CHECK(count_status(t, repro::CellStatus::Informational) ==
          want[i].informational);
    CHECK(count_status(t, repro::CellStatus::Erratum) == want[i].errata);
    CHECK(t.passed() == (want[i].failures == 0));
  }
  CHECK_FALSE(repro::all_passed(reports));

  const std::string text = repro::render(reports);
  CHECK(contains(text, "verdict: 6/7 tables fully reproduced"));
  CHECK(contains(text, "31 hard-cell failures (table 3)"));
  CHECK(contains(text, "expected 60258.6361"));
  CHECK(contains(text, "[ERRATUM]"));
  CHECK(contains(text, "12/12 cells match"));
}

TEST_CASE("single tables run standalone") {
  const repro::TableReport t1 = repro::run_table(1);
  CHECK(t1.passed());
  CHECK(t1.hard_cells() == 21);
  // The gauge vanishes identically at a = 0 and the check there is
  // exact, not a rounding comparison.
  const repro::CellCheck *zero = find_cell(t1, "a=0.00", "phi(a)");
  REQUIRE(zero != nullptr);
  CHECK(zero->actual == 0.0);
  CHECK(zero->tolerance == 0.0);

  CHECK(repro::run_table(2).passed());
  CHECK_FALSE(repro::run_table(3).passed());
  CHECK(contains(thrown_message<DataError>([] { repro::run_table(8); }),
                 "no reference table"));
  CHECK_THROWS_AS(repro::run_table(0), DataError);
}

TEST_CASE("the second-value anchor decides the first derived cell") {
  // Anchored (default): the second restored value echoes the second
  // observation and matches the printed grid.
  const repro::TableReport anchored = repro::run_table(3);
  const repro::CellCheck *cell = find_cell(anchored, "2006", "GM_SC(1,1)");
  REQUIRE(cell != nullptr);
  CHECK(cell->status == repro::CellStatus::Pass);
  CHECK(cell->expected == 28588.0);
  CHECK(rel_err(cell->actual, 28588.0) <= 1e-12);

  // The literal continuous response does not reproduce that cell.
  repro::ReproOptions first;
  first.sc_init = ScInit::First;
  const repro::TableReport literal = repro::run_table(3, first);
  const repro::CellCheck *cell2 = find_cell(literal, "2006", "GM_SC(1,1)");
  REQUIRE(cell2 != nullptr);
  CHECK(cell2->status == repro::CellStatus::Fail);
  CHECK(rel_err(cell2->actual, 28958.789525495849) <= 1e-10);
}

TEST_CASE("informational cells carry a convention note") {
  const repro::TableReport t4 = repro::run_table(4);
  const repro::CellCheck *dgm = find_cell(t4, "2005", "DGM(1,1)");
  REQUIRE(dgm != nullptr);
  CHECK(dgm->status == repro::CellStatus::Informational);
  CHECK_FALSE(dgm->hard());
  bool has_variant_note = false;
  for (const std::string &note : t4.notes)
    has_variant_note = has_variant_note || contains(note, "parameter");
  CHECK(has_variant_note);
}

TEST_CASE("erratum cells are checked against the consistent value") {
  const repro::TableReport t5 = repro::run_table(5);
  bool found = false;
  for (const repro::CellCheck &c : t5.cells) {
    if (c.status != repro::CellStatus::Erratum)
      continue;
    found = true;
    CHECK(c.column == "GM_SC(1,1)");
    CHECK_FALSE(c.note.empty());
  }
  CHECK(found);
}
