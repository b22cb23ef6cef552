#ifndef GREYSD_MODELS_HPP
#define GREYSD_MODELS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "greysd/metrics.hpp"
#include "greysd/series.hpp"

namespace greysd {

enum class ModelKind { GM11, DGM11, GM_SC, GM_SD };

// Initial condition of the continuous Simpson model's response
// function.  `Anchored` (default) echoes the second observation as the
// second restored value, which is what the reference tables show;
// `First` is the literal response anchored only at the first
// observation, so the second restored value is a genuine model output.
enum class ScInit { Anchored, First };

std::string to_string(ModelKind kind);       // "gm11", "dgm11", ...
std::string display_name(ModelKind kind);    // "GM(1,1)", ...
ModelKind model_kind_from_string(const std::string &name);

// Train/test split: the first `nu` samples build the model, the rest
// test prediction; `horizon` extends forecasts past the series end.
struct SplitSpec {
  std::size_t nu = 0;
  std::size_t horizon = 0;
  void validate(std::size_t n) const; // requires 4 <= nu <= n
};

// Development coefficient a and grey input b of the whitening equation
// dx1/dt + a x1 = b.
struct GreyParams {
  double a = 0.0;
  double b = 0.0;
};

// Constants of the Simpson-discrete recurrence solution.
//   w      = (sqrt(3 a^2 + 9) - 2a) / (a + 3)
//   lambda = (a - 3) / (w (a + 3))
//   mu     = 6 b / (a + 3)
struct SdConstants {
  double w = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
};

// Derived constants from fitted parameters.  Throws DegenerateDataError
// when a is too close to -3 (denominator) or w vanishes (a = 3).
SdConstants sd_constants(const GreyParams &p);

// First two raw values and first two accumulated values -- everything a
// fitted model needs to anchor its forecasts.
struct TrainHead {
  double x0_1 = 0.0;
  double x0_2 = 0.0;
  double x1_1 = 0.0;
  double x1_2 = 0.0;
};

struct FittedModel {
  ModelKind kind = ModelKind::GM11;
  GreyParams params;                // GM11, GM_SC, GM_SD
  double beta1 = 0.0, beta2 = 0.0;  // DGM11
  std::optional<SdConstants> sd;    // present iff kind == GM_SD
  ScInit sc_init = ScInit::Anchored; // meaningful for GM_SC only
  SplitSpec split;
  TrainHead head;
  std::uint64_t data_digest = 0; // FNV-1a over the training window

  // How many leading values the model echoes verbatim (1 or 2).
  std::size_t anchor_count() const;
};

// Below |a| = a_zero_tol the exponential response forms are replaced by
// their a -> 0 limits, avoiding catastrophic cancellation in
// (e^a - 1)/a; likewise for beta1 -> 1 in the discrete model and
// lambda -> 1 in geometric sums.
inline constexpr double kAZeroTol = 1e-9;
inline constexpr double kBeta1OneTol = 1e-9;
inline constexpr double kLambdaOneTol = 1e-8;
inline constexpr double kSdGuardTol = 1e-9;

FittedModel fit_gm11(const Series &s, const SplitSpec &split);
FittedModel fit_dgm11(const Series &s, const SplitSpec &split);
FittedModel fit_simpson(const Series &s, const SplitSpec &split,
                        ModelKind kind, ScInit sc_init = ScInit::Anchored);
FittedModel fit_model(const Series &s, const SplitSpec &split, ModelKind kind,
                      ScInit sc_init = ScInit::Anchored);

// Restored (raw-scale) forecast at 1-based index k.
double forecast(const FittedModel &m, std::size_t k);

// Restored values for k = 1..upto.
std::vector<double> restored_series(const FittedModel &m, std::size_t upto);

namespace detail {

// Closed restored form of the classical model,
//   x0(k) = ((e^a - 1)/a) (b - a x0(1)) e^{-a(k-1)},  k >= 2,
// algebraically equal to differencing the response function; kept
// separate so the equivalence can be asserted.
double gm11_restored_closed(const GreyParams &p, double x0_1, std::size_t k);

// Accumulated forecast of the Simpson-discrete model (sum form):
//   x1(k+1) = w^{k-1} x1(2)
//           + (x1(2) - w x1(1)) sum_{j=0}^{k-2} w^j lambda^{k-j-1}
//           + mu/(1-lambda)    sum_{j=0}^{k-2} w^j (1 - lambda^{k-j-1})
// with the empty-sum convention at k = 1.  The geometric factor is
// evaluated by explicit loop accumulation when lambda is near 1.
double gmsd_cum(const SdConstants &sd, double x1_1, double x1_2,
                std::size_t k_plus_1);

// Closed difference form of the same model:
//   x0(k+1) = w^{k-2}(w-1) x1(2)
//           + (x1(2) - w x1(1)) [ (lambda-1) T(k) + w^{k-2} ]
//           + mu T(k),            T(k) = sum_{j=0}^{k-2} w^j lambda^{k-2-j}
// valid for k >= 2 (the k = 1 boundary is the echoed second value).
double gmsd_restored_closed(const SdConstants &sd, double x1_1, double x1_2,
                            std::size_t k_plus_1);

} // namespace detail

// Per-model evaluation produced by run_experiment.
struct ForecastReport {
  ModelKind kind = ModelKind::GM11;
  std::vector<double> values;       // restored values, k = 1..n+horizon
  std::vector<double> ape;          // per-index APE, k = 1..n
  double mape_simu = 0.0;
  double mape_pred = 0.0;           // NaN when the window is empty
  double mape_over = 0.0;
  MetricWindow simu_window{};
  MetricWindow pred_window{};       // ell > m encodes an empty window
  MetricWindow over_window{};
};

// One slot per requested model; a failed fit carries the error message
// instead of aborting the whole batch.
struct ExperimentEntry {
  ModelKind kind = ModelKind::GM11;
  std::optional<ForecastReport> report;
  std::string error; // nonempty iff the model failed
};

// The error windows start at the first genuinely forecast index,
// anchor_count + 1: simulation [l, nu], prediction [nu+1, n],
// overall [l, n].
std::vector<ExperimentEntry>
run_experiment(const Series &s, const SplitSpec &split,
               const std::vector<ModelKind> &kinds,
               ScInit sc_init = ScInit::Anchored);

// The four kinds in canonical presentation order.
const std::vector<ModelKind> &all_model_kinds();

} // namespace greysd

#endif
