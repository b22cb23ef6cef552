#include "greysd/repro.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "greysd/dataset.hpp"
#include "greysd/diagnostics.hpp"
#include "greysd/errors.hpp"
#include "greysd/metrics.hpp"

namespace greysd::repro {

namespace {

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string num(double v) { return fmt("%.10g", v); }

CellCheck value_cell(std::string row, std::string column, double expected,
                     double actual, double tol) {
  CellCheck c;
  c.row = std::move(row);
  c.column = std::move(column);
  c.expected = expected;
  c.actual = actual;
  c.tolerance = tol;
  c.status = std::fabs(actual - expected) <= tol ? CellStatus::Pass
                                                 : CellStatus::Fail;
  return c;
}

CellCheck info_cell(std::string row, std::string column, double expected,
                    double actual, std::string note) {
  CellCheck c;
  c.row = std::move(row);
  c.column = std::move(column);
  c.expected = expected;
  c.actual = actual;
  c.status = CellStatus::Informational;
  c.note = std::move(note);
  return c;
}

// The printed value is floating-point round-off noise; what is checked
// is that the computed value stays below `ceiling`.
CellCheck noise_cell(std::string row, std::string column, double printed,
                     double actual, double ceiling) {
  CellCheck c;
  c.row = std::move(row);
  c.column = std::move(column);
  c.expected = printed;
  c.actual = actual;
  c.tolerance = ceiling;
  c.status =
      std::fabs(actual) <= ceiling ? CellStatus::Pass : CellStatus::Fail;
  c.note = "printed value is round-off noise; checked |computed| <= " +
           fmt("%g", ceiling);
  return c;
}

// The printed cell disagrees with the other cells of its own table; the
// check runs against `consistent`, the value implied by those cells.
CellCheck erratum_cell(std::string row, std::string column, double printed,
                       double consistent, double actual, double tol) {
  CellCheck c;
  c.row = std::move(row);
  c.column = std::move(column);
  c.expected = consistent;
  c.actual = actual;
  c.tolerance = tol;
  c.status = std::fabs(actual - consistent) <= tol ? CellStatus::Erratum
                                                   : CellStatus::Fail;
  c.note = "printed " + num(printed) +
           " disagrees with the same column's printed APE cells, whose "
           "window mean is " +
           num(consistent) + "; checked against the latter";
  return c;
}

const ForecastReport &report_for(const std::vector<ExperimentEntry> &entries,
                                 ModelKind kind) {
  for (const ExperimentEntry &e : entries)
    if (e.kind == kind && e.report)
      return *e.report;
  throw std::logic_error("missing model report for " + to_string(kind));
}

double max_abs_diff(const std::vector<double> &col, const double *printed,
                    std::size_t n, std::size_t from = 0) {
  double m = 0.0;
  for (std::size_t i = from; i < n; ++i)
    m = std::max(m, std::fabs(col[i] - printed[i]));
  return m;
}

// The printed DGM(1,1) columns follow the parameter-sharing variant
//   beta1 = (2 - a) / (2 + a),   beta2 = 2 b / (2 + a)
// with (a, b) taken from the classical fit, rather than the directly
// fitted discrete model.  The variant is reconstructed here so the
// notes can quantify the agreement.
std::vector<double> dgm_variant_column(const FittedModel &gm11,
                                       std::size_t upto) {
  FittedModel v = gm11;
  v.kind = ModelKind::DGM11;
  v.beta1 = (2.0 - gm11.params.a) / (2.0 + gm11.params.a);
  v.beta2 = 2.0 * gm11.params.b / (2.0 + gm11.params.a);
  return restored_series(v, upto);
}

// Restored Simpson-continuous column under the convention of the
// electricity table: echoes at k = 1, 2; the k = 3 cell differenced
// against the accumulated head x1(2) instead of the response at k = 2;
// response differences from k = 4 on.
std::vector<double> sc_kink_column(const Series &s, const SplitSpec &split,
                                   std::size_t upto) {
  const FittedModel m =
      fit_simpson(s, split, ModelKind::GM_SC, ScInit::Anchored);
  if (std::fabs(m.params.a) < kAZeroTol)
    throw DegenerateDataError("response-head convention undefined at a = 0");
  const double ba = m.params.b / m.params.a;
  const auto response = [&](std::size_t k) {
    return (m.head.x0_1 - ba) *
               std::exp(-m.params.a * (static_cast<double>(k) - 1.0)) +
           ba;
  };
  std::vector<double> v(upto);
  v[0] = m.head.x0_1;
  if (upto >= 2)
    v[1] = m.head.x0_2;
  if (upto >= 3)
    v[2] = response(3) - m.head.x1_2;
  for (std::size_t k = 4; k <= upto; ++k)
    v[k - 1] = response(k) - response(k - 1);
  return v;
}

std::string dgm_variant_note(double printed_vs_variant,
                             double printed_vs_standard) {
  return "printed DGM(1,1) cells follow the parameter-sharing variant "
         "beta1 = (2 - a)/(2 + a), beta2 = 2b/(2 + a) of the classical "
         "fit: max |printed - variant| = " +
         fmt("%.2e", printed_vs_variant) +
         ", while the directly fitted discrete model differs by up to " +
         fmt("%.2e", printed_vs_standard) +
         "; DGM(1,1) cells are reported as informational";
}

// ---- Table 1: the inconsistency gauge phi(a) ------------------------

TableReport table1() {
  TableReport t;
  t.table_id = 1;
  t.title = "inconsistency gauge phi(a) on a = 0.00..1.00";
  // Tolerance is half a unit of the last printed digit; the a = 0 cell
  // must vanish exactly.
  struct Row {
    double a, printed, tol;
  };
  static constexpr Row kRows[21] = {
      {0.00, 0.0, 0.0},          {0.05, 1.0952e-8, 5e-13},
      {0.10, 3.6857e-7, 5e-12},  {0.15, 2.9440e-6, 5e-11},
      {0.20, 1.3053e-5, 5e-10},  {0.25, 4.1922e-5, 5e-10},
      {0.30, 1.0981e-4, 5e-9},   {0.35, 2.4989e-4, 5e-9},
      {0.40, 5.1310e-4, 5e-9},   {0.45, 9.7400e-4, 5e-9},
      {0.50, 0.0017, 5e-5},      {0.55, 0.0029, 5e-5},
      {0.60, 0.0048, 5e-5},      {0.65, 0.0076, 5e-5},
      {0.70, 0.0115, 5e-5},      {0.75, 0.0172, 5e-5},
      {0.80, 0.0251, 5e-5},      {0.85, 0.0358, 5e-5},
      {0.90, 0.0503, 5e-5},      {0.95, 0.0696, 5e-5},
      {1.00, 0.0950, 5e-5},
  };
  for (const Row &r : kRows)
    t.cells.push_back(value_cell(fmt("a=%.2f", r.a), "phi(a)", r.printed,
                                 phi(r.a), r.tol));
  t.notes.push_back("tolerances are half a unit of the last printed digit; "
                    "the a=0.00 cell is required to vanish exactly");
  return t;
}

// ---- Table 2: synthetic homogeneous-exponential series --------------

TableReport table2(const ReproOptions &opts) {
  TableReport t;
  t.table_id = 2;
  t.title = "synthetic series x0(k) = 0.05 * 2.25^k, nu = 6";

  static constexpr double kActual[12] = {
      0.1125,  0.2531,  0.5695,   1.2814,   2.8833,   6.4873,
      14.5965, 32.8420, 73.8946,  166.2628, 374.0914, 841.7056};
  static constexpr double kSc[12] = {
      0.1125,  0.2531,  0.5667,  1.2727,   2.8584,   6.4199,
      14.4187, 32.3837, 72.7321, 163.3528, 366.8821, 823.9990};
  static constexpr double kScApe[12] = {
      0.0000, 0.0000, 0.5034, 0.6825, 0.8613, 1.0397,
      1.2178, 1.3956, 1.5731, 1.7503, 1.9271, 2.1037};
  static constexpr double kSdApe[12] = {
      0.0,       0.0,       0.1559e-12, 0.0520e-12, 0.0462e-12, 0.0274e-12,
      0.0122e-12, 0.0216e-12, 0.0192e-12, 0.0342e-12, 0.0456e-12, 0.0945e-12};
  static constexpr double kScMape[3] = {0.7717, 1.6613, 1.3055};
  static constexpr double kSdMape[3] = {1.5565e-13, 3.7893e-14, 5.0888e-14};
  // Half a unit of the four printed decimals.
  constexpr double kHalfDigit = 5e-5;
  // Percentage-point ceiling admitted for the noise cells.
  constexpr double kNoiseCeiling = 1e-10;

  std::vector<double> x(12);
  double v = 0.05;
  for (std::size_t k = 0; k < 12; ++k) {
    v *= 2.25;
    x[k] = v;
  }
  const Series s(x);
  const SplitSpec split{6, 0};
  const auto entries = run_experiment(
      s, split, {ModelKind::GM_SC, ModelKind::GM_SD}, opts.sc_init);
  const ForecastReport &sc = report_for(entries, ModelKind::GM_SC);
  const ForecastReport &sd = report_for(entries, ModelKind::GM_SD);

  for (std::size_t k = 1; k <= 12; ++k) {
    const std::string row = "k=" + std::to_string(k);
    t.cells.push_back(
        value_cell(row, "data", kActual[k - 1], x[k - 1], kHalfDigit));
    t.cells.push_back(value_cell(row, "GM_SC(1,1)", kSc[k - 1],
                                 sc.values[k - 1], kHalfDigit));
    t.cells.push_back(value_cell(row, "GM_SC(1,1) APE", kScApe[k - 1],
                                 sc.ape[k - 1], kHalfDigit));
    t.cells.push_back(value_cell(row, "GM_SD(1,1)", kActual[k - 1],
                                 sd.values[k - 1], kHalfDigit));
    if (k <= 2)
      t.cells.push_back(value_cell(row, "GM_SD(1,1) APE", kSdApe[k - 1],
                                   sd.ape[k - 1], kHalfDigit));
    else
      t.cells.push_back(noise_cell(row, "GM_SD(1,1) APE", kSdApe[k - 1],
                                   sd.ape[k - 1], kNoiseCeiling));
  }

  static const char *kMapeRows[3] = {"MAPE_simu", "MAPE_pred", "MAPE_over"};
  const double sc_mape[3] = {sc.mape_simu, sc.mape_pred, sc.mape_over};
  const double sd_mape[3] = {sd.mape_simu, sd.mape_pred, sd.mape_over};
  for (int r = 0; r < 3; ++r) {
    t.cells.push_back(value_cell(kMapeRows[r], "GM_SC(1,1)", kScMape[r],
                                 sc_mape[r], kMapeTol));
    t.cells.push_back(noise_cell(kMapeRows[r], "GM_SD(1,1)", kSdMape[r],
                                 sd_mape[r], kNoiseCeiling));
  }

  std::size_t exact = 0;
  for (std::size_t k = 0; k < 12; ++k)
    if (std::fabs(sd.values[k] - x[k]) <= kHalfDigit)
      ++exact;
  t.notes.push_back("GM_SD(1,1) column reproduces the data: " +
                    std::to_string(exact) +
                    "/12 cells match at four decimals");
  return t;
}

// ---- Table 3: electricity consumption --------------------------------

TableReport table3(const ReproOptions &opts) {
  TableReport t;
  t.table_id = 3;
  t.title = "electricity_cn: model values and MAPE";

  static constexpr double kData[10] = {24940.3, 28588.0, 32711.8, 34541.4,
                                       37032.2, 41932.5, 47000.9, 49762.6,
                                       54203.4, 56383.7};
  static constexpr double kGm[10] = {24940.3000, 28678.0326, 31558.7319,
                                     34728.7965, 38217.2931, 42056.2081,
                                     46280.7409, 50929.6267, 56045.4916,
                                     61675.2435};
  static constexpr double kDgm[10] = {24940.3000, 28701.0256, 31586.3461,
                                      34761.7284, 38256.3326, 42102.2502,
                                      46334.7987, 50992.8462, 56119.1683,
                                      61760.8406};
  static constexpr double kSc[10] = {24940.3000, 28588.0000, 32127.3503,
                                     34825.5851, 38190.8687, 41881.3482,
                                     45928.4479, 50366.6289, 55233.6827,
                                     60571.0519};
  static constexpr double kSd[10] = {24940.3000, 28588.0000, 32080.3602,
                                     34472.6239, 38490.1274, 41543.9697,
                                     46203.8856, 50042.7998, 55485.5079,
                                     60258.6361};
  static constexpr double kMape[3][4] = {
      {1.5675, 1.5994, 1.6293, 1.7387},
      {5.0428, 5.1811, 3.5137, 3.2669},
      {2.7260, 2.7933, 2.3360, 2.3118}};

  const Dataset &ds = fixture("electricity_cn");
  const Series s = ds.to_series();
  const SplitSpec split{ds.default_nu, 0};
  const std::size_t n = s.size();
  const auto entries = run_experiment(s, split, all_model_kinds(), opts.sc_init);
  const ForecastReport &gm = report_for(entries, ModelKind::GM11);
  const ForecastReport &dg = report_for(entries, ModelKind::DGM11);
  const ForecastReport &sc = report_for(entries, ModelKind::GM_SC);
  const ForecastReport &sd = report_for(entries, ModelKind::GM_SD);

  const std::string dgm_note =
      "convention difference, see table note on the DGM(1,1) variant";
  for (std::size_t k = 1; k <= n; ++k) {
    const std::string &row = ds.labels[k - 1];
    t.cells.push_back(
        value_cell(row, "data", kData[k - 1], s.values()[k - 1], 1e-9));
    t.cells.push_back(value_cell(row, "GM(1,1)", kGm[k - 1],
                                 gm.values[k - 1], kValueTol));
    t.cells.push_back(
        info_cell(row, "DGM(1,1)", kDgm[k - 1], dg.values[k - 1], dgm_note));
    t.cells.push_back(value_cell(row, "GM_SC(1,1)", kSc[k - 1],
                                 sc.values[k - 1], kValueTol));
    t.cells.push_back(value_cell(row, "GM_SD(1,1)", kSd[k - 1],
                                 sd.values[k - 1], kValueTol));
  }

  static const char *kMapeRows[3] = {"MAPE_simu", "MAPE_pred", "MAPE_over"};
  const ForecastReport *reps[4] = {&gm, &dg, &sc, &sd};
  for (int r = 0; r < 3; ++r) {
    for (int j = 0; j < 4; ++j) {
      const ForecastReport &rep = *reps[j];
      const double val = r == 0   ? rep.mape_simu
                         : r == 1 ? rep.mape_pred
                                  : rep.mape_over;
      if (j == 1)
        t.cells.push_back(info_cell(kMapeRows[r], display_name(rep.kind),
                                    kMape[r][j], val, dgm_note));
      else
        t.cells.push_back(value_cell(kMapeRows[r], display_name(rep.kind),
                                     kMape[r][j], val, kMapeTol));
    }
  }

  t.notes.push_back(
      "hard failures in this table trace to the data vintage: the printed "
      "columns are consistent with a revision of the series that differs "
      "at 2005, 2010, 2012, 2013 and 2014");

  // Quantify: refit everything on the reconstructed vintage and diff
  // against the printed grid.
  try {
    static const std::vector<double> kVintage = {
        24921.4, 28588.0, 32711.8, 34541.4, 37032.2,
        41934.5, 47000.9, 49754.6, 54210.7, 56385.0};
    const Series vs(kVintage);
    const FittedModel g = fit_gm11(vs, split);
    const FittedModel sdm =
        fit_simpson(vs, split, ModelKind::GM_SD, ScInit::Anchored);
    const std::vector<double> col_g = restored_series(g, n);
    const std::vector<double> col_d = dgm_variant_column(g, n);
    const std::vector<double> col_c = sc_kink_column(vs, split, n);
    const std::vector<double> col_s = restored_series(sdm, n);
    t.notes.push_back(
        "refit on the reconstructed vintage (24921.4, 28588.0, 32711.8, "
        "34541.4, 37032.2, 41934.5, 47000.9, 49754.6, 54210.7, 56385.0): "
        "max |printed - recomputed| over the 2006-2014 value cells = "
        "GM(1,1) " +
        fmt("%.2e", max_abs_diff(col_g, kGm, n, 1)) + ", DGM(1,1) variant " +
        fmt("%.2e", max_abs_diff(col_d, kDgm, n, 1)) + ", GM_SC(1,1) " +
        fmt("%.2e", max_abs_diff(col_c, kSc, n, 1)) + ", GM_SD(1,1) " +
        fmt("%.2e", max_abs_diff(col_s, kSd, n, 1)) +
        " (the 2005 row echoes the first datum, which the revision moved "
        "to 24940.3)");

    const std::vector<double> *cols[4] = {&col_g, &col_d, &col_c, &col_s};
    const std::size_t ells[4] = {2, 2, 3, 3};
    double dm = 0.0;
    for (int j = 0; j < 4; ++j) {
      const std::vector<double> &col = *cols[j];
      const double m_simu = mape(vs.values(), col, {ells[j], split.nu});
      const double m_pred = mape(vs.values(), col, {split.nu + 1, n});
      const double m_over = mape(vs.values(), col, {ells[j], n});
      dm = std::max(dm, std::fabs(m_simu - kMape[0][j]));
      dm = std::max(dm, std::fabs(m_pred - kMape[1][j]));
      dm = std::max(dm, std::fabs(m_over - kMape[2][j]));
    }
    t.notes.push_back("vintage refit MAPE rows: max |printed - recomputed| = " +
                      fmt("%.2e", dm));
    t.notes.push_back(
        "the vintage GM_SC(1,1) column takes its 2007 cell as the response "
        "at k = 3 minus the accumulated head x1(2); all later cells are "
        "response differences");
  } catch (const std::exception &e) {
    t.notes.push_back(std::string("vintage recomputation failed: ") +
                      e.what());
  }

  const FittedModel g_now = fit_gm11(s, split);
  const std::vector<double> variant_now = dgm_variant_column(g_now, n);
  t.notes.push_back(dgm_variant_note(max_abs_diff(variant_now, kDgm, n),
                                     max_abs_diff(dg.values, kDgm, n)));
  return t;
}

// ---- Tables 4/6: fixture value grids ---------------------------------

struct ValueGrid {
  const char *fixture_name;
  const char *title;
  const double *data;
  const double *gm11;
  const double *dgm;
  const double *sc;
  const double *sd;
};

TableReport values_table(int id, const ReproOptions &opts) {
  static constexpr double kGdpData[12] = {504.65,  567.04,  638.47,  732.76,
                                          846.28,  926.00,  1100.40, 1360.03,
                                          1563.80, 1776.28, 2000.94, 2095.99};
  static constexpr double kGdpGm[12] = {504.6500,  568.6831,  644.1549,
                                        729.6429,  826.4761,  936.1605,
                                        1060.4014, 1201.1307, 1360.5367,
                                        1541.0980, 1745.6222, 1977.2894};
  static constexpr double kGdpDgm[12] = {504.6500,  569.4678,  645.1480,
                                         730.8858,  828.0179,  938.0585,
                                         1062.7230, 1203.9551, 1363.9563,
                                         1545.2212, 1750.5754, 1983.2206};
  static constexpr double kGdpSc[12] = {504.6500,  567.0400,  643.2803,
                                        731.7331,  832.3484,  946.7986,
                                        1076.9861, 1225.0746, 1393.5258,
                                        1585.1395, 1803.1005, 2051.0319};
  static constexpr double kGdpSd[12] = {504.6500,  567.0400,  642.0348,
                                        733.1665,  831.2488,  948.1637,
                                        1076.0331, 1226.3916, 1392.7242,
                                        1586.4313, 1802.4595, 2052.3253};

  static constexpr double kFrData[11] = {5786, 5973, 6262,  6840,  7207, 7332,
                                         8032, 8882, 9728,  10531, 11147};
  static constexpr double kFrGm[11] = {5786.0000, 6015.9317, 6349.6357,
                                       6701.8503, 7073.6022, 7465.9753,
                                       7880.1133, 8317.2236, 8778.5804,
                                       9265.5286, 9779.4880};
  static constexpr double kFrDgm[11] = {5786.0000, 6017.4333, 6351.3039,
                                        6703.6990, 7075.6463, 7468.2307,
                                        7882.5972, 8319.9544, 8781.5778,
                                        9268.8140, 9783.0839};
  static constexpr double kFrSc[11] = {5786.0000, 5973.0000, 6346.0123,
                                       6724.0011, 7124.5042, 7548.8625,
                                       7998.4969, 8474.9130, 8979.7061,
                                       9514.5662, 10081.2842};
  static constexpr double kFrSd[11] = {5786.0000, 5973.0000, 6361.0051,
                                       6708.2685, 7138.8492, 7533.6395,
                                       8012.2088, 8460.1700, 8992.7976,
                                       9500.2731, 10093.7664};

  const ValueGrid grid =
      id == 4 ? ValueGrid{"gdp_lanzhou", "gdp_lanzhou: model values",
                          kGdpData, kGdpGm, kGdpDgm, kGdpSc, kGdpSd}
              : ValueGrid{"freightage_lanzhou",
                          "freightage_lanzhou: model values", kFrData, kFrGm,
                          kFrDgm, kFrSc, kFrSd};

  TableReport t;
  t.table_id = id;
  t.title = grid.title;

  const Dataset &ds = fixture(grid.fixture_name);
  const Series s = ds.to_series();
  const SplitSpec split{ds.default_nu, 0};
  const std::size_t n = s.size();
  const auto entries = run_experiment(s, split, all_model_kinds(), opts.sc_init);
  const ForecastReport &gm = report_for(entries, ModelKind::GM11);
  const ForecastReport &dg = report_for(entries, ModelKind::DGM11);
  const ForecastReport &sc = report_for(entries, ModelKind::GM_SC);
  const ForecastReport &sd = report_for(entries, ModelKind::GM_SD);

  const std::string dgm_note =
      "convention difference, see table note on the DGM(1,1) variant";
  for (std::size_t k = 1; k <= n; ++k) {
    const std::string &row = ds.labels[k - 1];
    t.cells.push_back(
        value_cell(row, "data", grid.data[k - 1], s.values()[k - 1], 1e-9));
    t.cells.push_back(value_cell(row, "GM(1,1)", grid.gm11[k - 1],
                                 gm.values[k - 1], kValueTol));
    t.cells.push_back(info_cell(row, "DGM(1,1)", grid.dgm[k - 1],
                                dg.values[k - 1], dgm_note));
    t.cells.push_back(value_cell(row, "GM_SC(1,1)", grid.sc[k - 1],
                                 sc.values[k - 1], kValueTol));
    t.cells.push_back(value_cell(row, "GM_SD(1,1)", grid.sd[k - 1],
                                 sd.values[k - 1], kValueTol));
  }

  const FittedModel g_now = fit_gm11(s, split);
  const std::vector<double> variant = dgm_variant_column(g_now, n);
  t.notes.push_back(dgm_variant_note(max_abs_diff(variant, grid.dgm, n),
                                     max_abs_diff(dg.values, grid.dgm, n)));
  return t;
}

// ---- Tables 5/7: fixture percentage-error grids ----------------------

struct ErrorGrid {
  const char *fixture_name;
  const char *title;
  const double *gm11;
  const double *dgm;
  const double *sc;
  const double *sd;
  const double (*mape)[4]; // rows simu/pred/over, columns as above
  double sc_simu_printed;  // the erratum cell
};

TableReport errors_table(int id, const ReproOptions &opts) {
  static constexpr double kGdpGm[12] = {0,      0.2898,  0.8904,  0.4254,
                                        2.3401, 1.0972,  3.6349,  11.6835,
                                        12.9980, 13.2401, 12.7599, 5.6632};
  static constexpr double kGdpDgm[12] = {0,      0.4281,  1.0459,  0.2558,
                                         2.1579, 1.3022,  3.4239,  11.4758,
                                         12.7794, 13.0080, 12.5123, 5.3802};
  static constexpr double kGdpSc[12] = {0,      0,       0.7534,  0.1401,
                                        1.6462, 2.2461,  2.1278,  9.9230,
                                        10.8885, 10.7607, 9.8873,  2.1450};
  static constexpr double kGdpSd[12] = {0,      0,       0.5583,  0.0555,
                                        1.7762, 2.3935,  2.2144,  9.8261,
                                        10.9397, 10.6880, 9.9194,  2.0832};
  static constexpr double kGdpMape[3][4] = {
      {1.0086, 1.0379, 1.1869, 1.1959},
      {9.9966, 9.7633, 7.6220, 7.6118},
      {5.9111, 5.7972, 5.0518, 5.0454}};

  static constexpr double kFrGm[11] = {0,      0.7188, 1.3995, 2.0197,
                                       1.8509, 1.8273, 1.8910, 6.3587,
                                       9.7597, 12.0166, 12.2680};
  static constexpr double kFrDgm[11] = {0,      0.7439, 1.4261, 1.9927,
                                        1.8226, 1.8580, 1.8601, 6.3279,
                                        9.7288, 11.9854, 12.2357};
  static constexpr double kFrSc[11] = {0,      0,      1.3416, 1.6959,
                                       1.1447, 2.9578, 0.4171, 4.5833,
                                       7.6922, 9.6518, 9.5606};
  static constexpr double kFrSd[11] = {0,      0,      1.5810, 1.9259,
                                       0.9456, 2.7501, 0.2464, 4.7493,
                                       7.5576, 9.7875, 9.4486};
  static constexpr double kFrMape[3][4] = {
      {1.5632, 1.5687, 1.8499, 1.8007},
      {8.4588, 8.4276, 6.3810, 6.3579},
      {5.0110, 4.9981, 4.3383, 4.3325}};

  const ErrorGrid grid =
      id == 5 ? ErrorGrid{"gdp_lanzhou", "gdp_lanzhou: APE and MAPE",
                          kGdpGm, kGdpDgm, kGdpSc, kGdpSd, kGdpMape, 1.1869}
              : ErrorGrid{"freightage_lanzhou",
                          "freightage_lanzhou: APE and MAPE", kFrGm, kFrDgm,
                          kFrSc, kFrSd, kFrMape, 1.8499};

  TableReport t;
  t.table_id = id;
  t.title = grid.title;

  const Dataset &ds = fixture(grid.fixture_name);
  const Series s = ds.to_series();
  const SplitSpec split{ds.default_nu, 0};
  const std::size_t n = s.size();
  const std::size_t nu = split.nu;
  const auto entries = run_experiment(s, split, all_model_kinds(), opts.sc_init);
  const ForecastReport &gm = report_for(entries, ModelKind::GM11);
  const ForecastReport &dg = report_for(entries, ModelKind::DGM11);
  const ForecastReport &sc = report_for(entries, ModelKind::GM_SC);
  const ForecastReport &sd = report_for(entries, ModelKind::GM_SD);

  const std::string dgm_note =
      "convention difference, see table note on the DGM(1,1) variant";
  for (std::size_t k = 1; k <= n; ++k) {
    const std::string &row = ds.labels[k - 1];
    t.cells.push_back(value_cell(row, "GM(1,1)", grid.gm11[k - 1],
                                 gm.ape[k - 1], kMapeTol));
    t.cells.push_back(
        info_cell(row, "DGM(1,1)", grid.dgm[k - 1], dg.ape[k - 1], dgm_note));
    t.cells.push_back(
        value_cell(row, "GM_SC(1,1)", grid.sc[k - 1], sc.ape[k - 1], kMapeTol));
    t.cells.push_back(
        value_cell(row, "GM_SD(1,1)", grid.sd[k - 1], sd.ape[k - 1], kMapeTol));
  }

  // The value implied by the table's own printed APE cells over the
  // simulation window [3, nu].
  double sc_simu_consistent = 0.0;
  for (std::size_t k = 3; k <= nu; ++k)
    sc_simu_consistent += grid.sc[k - 1];
  sc_simu_consistent /= static_cast<double>(nu - 2);

  static const char *kMapeRows[3] = {"MAPE_simu", "MAPE_pred", "MAPE_over"};
  const ForecastReport *reps[4] = {&gm, &dg, &sc, &sd};
  for (int r = 0; r < 3; ++r) {
    for (int j = 0; j < 4; ++j) {
      const ForecastReport &rep = *reps[j];
      const double val = r == 0   ? rep.mape_simu
                         : r == 1 ? rep.mape_pred
                                  : rep.mape_over;
      if (j == 1) {
        t.cells.push_back(info_cell(kMapeRows[r], display_name(rep.kind),
                                    grid.mape[r][j], val, dgm_note));
      } else if (j == 2 && r == 0) {
        t.cells.push_back(erratum_cell(kMapeRows[r], display_name(rep.kind),
                                       grid.sc_simu_printed,
                                       sc_simu_consistent, val, kMapeTol));
      } else {
        t.cells.push_back(value_cell(kMapeRows[r], display_name(rep.kind),
                                     grid.mape[r][j], val, kMapeTol));
      }
    }
  }

  t.notes.push_back(
      "the printed GM_SC(1,1) MAPE_simu cell (" +
      num(grid.sc_simu_printed) +
      ") is inconsistent with the printed GM_SC(1,1) APE cells, whose "
      "simulation-window mean is " +
      num(sc_simu_consistent) + "; the cell is checked against the latter");

  const FittedModel g_now = fit_gm11(s, split);
  const std::vector<double> variant = dgm_variant_column(g_now, n);
  std::vector<double> variant_ape(n);
  for (std::size_t k = 1; k <= n; ++k)
    variant_ape[k - 1] = ape(s.values()[k - 1], variant[k - 1]);
  double v_mape_diff = 0.0;
  const double vm[3] = {mape(s.values(), variant, {2, nu}),
                        mape(s.values(), variant, {nu + 1, n}),
                        mape(s.values(), variant, {2, n})};
  for (int r = 0; r < 3; ++r)
    v_mape_diff = std::max(v_mape_diff, std::fabs(vm[r] - grid.mape[r][1]));
  t.notes.push_back(
      dgm_variant_note(
          std::max(max_abs_diff(variant_ape, grid.dgm, n), v_mape_diff),
          max_abs_diff(dg.ape, grid.dgm, n)));
  return t;
}

} // namespace

std::size_t TableReport::hard_failures() const {
  std::size_t count = 0;
  for (const CellCheck &c : cells)
    if (c.status == CellStatus::Fail)
      ++count;
  return count;
}

std::size_t TableReport::hard_cells() const {
  std::size_t count = 0;
  for (const CellCheck &c : cells)
    if (c.hard())
      ++count;
  return count;
}

TableReport run_table(int table_id, const ReproOptions &opts) {
  switch (table_id) {
  case 1:
    return table1();
  case 2:
    return table2(opts);
  case 3:
    return table3(opts);
  case 4:
  case 6:
    return values_table(table_id, opts);
  case 5:
  case 7:
    return errors_table(table_id, opts);
  default:
    throw DataError("no reference table " + std::to_string(table_id) +
                    " (expected 1..7)");
  }
}

std::vector<TableReport> run_all(const ReproOptions &opts) {
  std::vector<TableReport> reports;
  reports.reserve(7);
  for (int id = 1; id <= 7; ++id)
    reports.push_back(run_table(id, opts));
  return reports;
}

std::string render(const std::vector<TableReport> &reports) {
  std::string out;
  std::size_t total_failures = 0;
  std::size_t tables_clean = 0;
  std::string failing_tables;
  for (const TableReport &t : reports) {
    out += "Table " + std::to_string(t.table_id) + ": " + t.title + "\n";
    std::size_t info = 0, errata = 0;
    for (const CellCheck &c : t.cells) {
      const char *tag = c.status == CellStatus::Pass          ? "[PASS]"
                        : c.status == CellStatus::Fail        ? "[FAIL]"
                        : c.status == CellStatus::Informational ? "[INFO]"
                                                                : "[ERRATUM]";
      if (c.status == CellStatus::Informational)
        ++info;
      if (c.status == CellStatus::Erratum)
        ++errata;
      out += std::string(tag) + " Table " + std::to_string(t.table_id) +
             " / " + c.row + " / " + c.column + ": expected " +
             num(c.expected) + ", computed " + num(c.actual) +
             ", |diff| = " + fmt("%.3g", std::fabs(c.actual - c.expected));
      if (c.hard() || c.status == CellStatus::Erratum)
        out += " (tol " + fmt("%g", c.tolerance) + ")";
      if (!c.note.empty())
        out += " -- " + c.note;
      out += "\n";
    }
    for (const std::string &note : t.notes)
      out += "note: " + note + "\n";
    const std::size_t hard = t.hard_cells();
    const std::size_t failures = t.hard_failures();
    out += "-> " + std::to_string(hard - failures) + "/" +
           std::to_string(hard) + " hard cells pass";
    if (info)
      out += ", " + std::to_string(info) + " informational";
    if (errata)
      out += ", " + std::to_string(errata) + " errata checked";
    out += "\n\n";
    total_failures += failures;
    if (failures == 0)
      ++tables_clean;
    else
      failing_tables += (failing_tables.empty() ? "" : ", ") +
                        std::to_string(t.table_id);
  }
  out += "verdict: " + std::to_string(tables_clean) + "/" +
         std::to_string(reports.size()) + " tables fully reproduced";
  if (total_failures)
    out += ", " + std::to_string(total_failures) +
           " hard-cell failures (table " + failing_tables + ")";
  out += "\n";
  return out;
}

bool all_passed(const std::vector<TableReport> &reports) {
  for (const TableReport &t : reports)
    if (!t.passed())
      return false;
  return true;
}

} // namespace greysd::repro
