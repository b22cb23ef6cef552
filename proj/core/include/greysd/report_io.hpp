#ifndef GREYSD_REPORT_IO_HPP
#define GREYSD_REPORT_IO_HPP

#include <string>
#include <vector>

#include "greysd/dataset.hpp"
#include "greysd/diagnostics.hpp"
#include "greysd/digest.hpp"
#include "greysd/models.hpp"

namespace greysd {

enum class ReportFormat { Table, Csv, Json };

ReportFormat report_format_from_string(const std::string &name);

// Fitted-model JSON document:
//   {kind, a, b, beta1, beta2, w, lambda, mu, nu, sc_init,
//    anchors: {x0_1, x0_2, x1_1, x1_2}, data_digest}
// Absent fields encode non-applicability (beta1/beta2 only for dgm11;
// w/lambda/mu only for gm_sd; sc_init only for gm_sc, absence meaning
// "anchored").  data_digest is a 16-hex-digit string.  Round-trips are
// bit-stable.
std::string model_to_json(const FittedModel &m);
FittedModel model_from_json(const std::string &text);

// Multi-model comparison on one dataset in the requested format.  The
// table layout mirrors the reference tables: label column, data column,
// one value column per model, APE block, MAPE footer with the best
// prediction/overall cells starred.  CSV is the same grid, one header
// line; JSON carries full-precision values.
std::string render_comparison(const Series &s,
                              const std::vector<ExperimentEntry> &entries,
                              const SplitSpec &split, ReportFormat format,
                              const std::string &dataset_name = "");

// phi-vs-a sweep as two-column CSV: a with two decimals, phi with five
// significant digits in scientific notation (exponent without leading
// zero), exact zero rendered "0".  Row examples: "0.00,0",
// "0.30,1.0981e-4".
std::string phi_csv(const std::vector<double> &a_grid);

// Epsilon sweep as CSV (header "r,q,epsilon") plus a trailing comment
// block with the sweep's provenance (seed, exclusion radius, failures).
std::string epsilon_csv(const EpsilonGridResult &grid);

// Human-readable sweep summary (max epsilon, argmax cell, settings).
std::string epsilon_summary(const EpsilonGridResult &grid);

} // namespace greysd

#endif
