#ifndef GREYSD_REPRO_HPP
#define GREYSD_REPRO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "greysd/models.hpp"

// Reproduction harness: recompute every cell of the seven reference
// tables from the embedded fixtures and diff against the printed
// values.  Hard cells pass/fail at the stated tolerances; cells whose
// printed sources are identifiably inconsistent or produced by a
// different convention are classified instead of silently retuned.

namespace greysd::repro {

enum class CellStatus {
  Pass,          // hard cell within tolerance
  Fail,          // hard cell out of tolerance
  Informational, // not counted: known convention difference (see note)
  Erratum        // printed cell is internally inconsistent; checked
                 // against the value consistent with the same table
};

struct CellCheck {
  std::string row;    // "2006", "k=6", "MAPE_pred", "a=0.30"
  std::string column; // "GM(1,1)", "phi(a)", ...
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  CellStatus status = CellStatus::Pass;
  std::string note;

  bool hard() const {
    return status == CellStatus::Pass || status == CellStatus::Fail;
  }
};

struct TableReport {
  int table_id = 0;
  std::string title;
  std::vector<CellCheck> cells;
  std::vector<std::string> notes;

  std::size_t hard_failures() const;
  std::size_t hard_cells() const;
  bool passed() const { return hard_failures() == 0; }
};

struct ReproOptions {
  ScInit sc_init = ScInit::Anchored;
};

// Default tolerances: 1e-3 absolute for values, 1e-3 percentage points
// for APE/MAPE cells.
inline constexpr double kValueTol = 1e-3;
inline constexpr double kMapeTol = 1e-3;

TableReport run_table(int table_id, const ReproOptions &opts = {});
std::vector<TableReport> run_all(const ReproOptions &opts = {});

// Per-cell pass/fail lines, per-table summaries, and a final verdict.
std::string render(const std::vector<TableReport> &reports);

bool all_passed(const std::vector<TableReport> &reports);

} // namespace greysd::repro

#endif
