#include "greysd/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "greysd/detail/fit_kernels.hpp"
#include "greysd/digest.hpp"
#include "greysd/errors.hpp"

namespace greysd {

std::string to_string(ModelKind kind) {
  switch (kind) {
  case ModelKind::GM11:
    return "gm11";
  case ModelKind::DGM11:
    return "dgm11";
  case ModelKind::GM_SC:
    return "gm_sc";
  case ModelKind::GM_SD:
    return "gm_sd";
  }
  throw std::logic_error("unreachable model kind");
}

std::string display_name(ModelKind kind) {
  switch (kind) {
  case ModelKind::GM11:
    return "GM(1,1)";
  case ModelKind::DGM11:
    return "DGM(1,1)";
  case ModelKind::GM_SC:
    return "GM_SC(1,1)";
  case ModelKind::GM_SD:
    return "GM_SD(1,1)";
  }
  throw std::logic_error("unreachable model kind");
}

ModelKind model_kind_from_string(const std::string &name) {
  if (name == "gm11")
    return ModelKind::GM11;
  if (name == "dgm11")
    return ModelKind::DGM11;
  if (name == "gm_sc")
    return ModelKind::GM_SC;
  if (name == "gm_sd")
    return ModelKind::GM_SD;
  throw DataError("unknown model kind '" + name +
                  "' (expected gm11, dgm11, gm_sc or gm_sd)");
}

const std::vector<ModelKind> &all_model_kinds() {
  static const std::vector<ModelKind> kinds = {
      ModelKind::GM11, ModelKind::DGM11, ModelKind::GM_SC, ModelKind::GM_SD};
  return kinds;
}

void SplitSpec::validate(std::size_t n) const {
  if (nu < kMinSeriesLength || nu > n)
    throw DataError("split nu = " + std::to_string(nu) +
                    " must satisfy 4 <= nu <= " + std::to_string(n));
}

std::size_t FittedModel::anchor_count() const {
  switch (kind) {
  case ModelKind::GM11:
  case ModelKind::DGM11:
    return 1;
  case ModelKind::GM_SC:
    return sc_init == ScInit::Anchored ? 2 : 1;
  case ModelKind::GM_SD:
    return 2;
  }
  throw std::logic_error("unreachable model kind");
}

SdConstants sd_constants(const GreyParams &p) {
  const double denom = p.a + 3.0;
  if (std::fabs(denom) < kSdGuardTol)
    throw DegenerateDataError(
        "gm_sd: derived constants undefined (a too close to -3)");
  SdConstants sd;
  sd.w = (std::sqrt(3.0 * p.a * p.a + 9.0) - 2.0 * p.a) / denom;
  if (std::fabs(sd.w) < kSdGuardTol)
    throw DegenerateDataError(
        "gm_sd: derived constant w vanishes (a too close to 3)");
  sd.lambda = (p.a - 3.0) / (sd.w * denom);
  sd.mu = 6.0 * p.b / denom;
  return sd;
}

namespace {

TrainHead make_head(const Series &s) {
  TrainHead h;
  h.x0_1 = s.values()[0];
  h.x0_2 = s.values()[1];
  h.x1_1 = s.values()[0];
  h.x1_2 = s.values()[0] + s.values()[1];
  return h;
}

// Run a fit kernel in the extended accumulator precision on the
// training window.
template <class Kernel>
GreyParams run_kernel(const Series &s, std::size_t nu, Kernel kernel) {
  std::vector<detail::acc_t> x(s.values().begin(), s.values().begin() + nu);
  auto [a, b] = kernel(x, nu);
  return GreyParams{static_cast<double>(a), static_cast<double>(b)};
}

} // namespace

FittedModel fit_gm11(const Series &s, const SplitSpec &split) {
  split.validate(s.size());
  FittedModel m;
  m.kind = ModelKind::GM11;
  m.params = run_kernel(s, split.nu, [](const auto &x, std::size_t nu) {
    return detail::fit_gm11_params(x, nu);
  });
  m.split = split;
  m.head = make_head(s);
  m.data_digest = values_digest(s.values(), split.nu);
  return m;
}

FittedModel fit_dgm11(const Series &s, const SplitSpec &split) {
  split.validate(s.size());
  FittedModel m;
  m.kind = ModelKind::DGM11;
  const GreyParams pair =
      run_kernel(s, split.nu, [](const auto &x, std::size_t nu) {
        return detail::fit_dgm11_params(x, nu);
      });
  m.beta1 = pair.a;
  m.beta2 = pair.b;
  m.split = split;
  m.head = make_head(s);
  m.data_digest = values_digest(s.values(), split.nu);
  return m;
}

FittedModel fit_simpson(const Series &s, const SplitSpec &split,
                        ModelKind kind, ScInit sc_init) {
  if (kind != ModelKind::GM_SC && kind != ModelKind::GM_SD)
    throw std::invalid_argument("fit_simpson expects GM_SC or GM_SD");
  split.validate(s.size());
  FittedModel m;
  m.kind = kind;
  m.params = run_kernel(s, split.nu, [](const auto &x, std::size_t nu) {
    return detail::fit_simpson_params(x, nu);
  });
  if (kind == ModelKind::GM_SD)
    m.sd = sd_constants(m.params);
  else
    m.sc_init = sc_init;
  m.split = split;
  m.head = make_head(s);
  m.data_digest = values_digest(s.values(), split.nu);
  return m;
}

FittedModel fit_model(const Series &s, const SplitSpec &split, ModelKind kind,
                      ScInit sc_init) {
  switch (kind) {
  case ModelKind::GM11:
    return fit_gm11(s, split);
  case ModelKind::DGM11:
    return fit_dgm11(s, split);
  case ModelKind::GM_SC:
  case ModelKind::GM_SD:
    return fit_simpson(s, split, kind, sc_init);
  }
  throw std::logic_error("unreachable model kind");
}

namespace detail {

double gm11_restored_closed(const GreyParams &p, double x0_1, std::size_t k) {
  if (k < 2)
    throw std::invalid_argument("closed restored form starts at k = 2");
  if (std::fabs(p.a) < kAZeroTol)
    return p.b;
  return (std::expm1(p.a) / p.a) * (p.b - p.a * x0_1) *
         std::exp(-p.a * static_cast<double>(k - 1));
}

namespace {

// sum_{i=0}^{m-1} lambda^i by explicit accumulation; used when the
// closed ratio (1 - lambda^m)/(1 - lambda) would be 0/0.
double geom_loop(double lambda, std::size_t m) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    s += p;
    p *= lambda;
  }
  return s;
}

} // namespace

double gmsd_cum(const SdConstants &sd, double x1_1, double x1_2,
                std::size_t k_plus_1) {
  if (k_plus_1 < 1)
    throw std::invalid_argument("accumulated index starts at 1");
  if (k_plus_1 == 1)
    return x1_1;
  // Eq index k = k_plus_1 - 1; sums run j = 0..k-2 (empty at k = 1).
  const std::size_t K = k_plus_1;
  const double A = x1_2 - sd.w * x1_1;
  const bool lam_near_one = std::fabs(1.0 - sd.lambda) < kLambdaOneTol;
  double s1 = 0.0, s3 = 0.0, wj = 1.0;
  for (std::size_t j = 0; j + 2 <= K - 1; ++j) {
    const std::size_t m = K - 2 - j; // lambda exponent k-1-j >= 1
    const double lam_m = std::pow(sd.lambda, static_cast<double>(m));
    s1 += wj * lam_m;
    s3 += wj * (lam_near_one ? geom_loop(sd.lambda, m)
                             : (1.0 - lam_m) / (1.0 - sd.lambda));
    wj *= sd.w;
  }
  return std::pow(sd.w, static_cast<double>(K - 2)) * x1_2 + A * s1 +
         sd.mu * s3;
}

double gmsd_restored_closed(const SdConstants &sd, double x1_1, double x1_2,
                            std::size_t k_plus_1) {
  if (k_plus_1 < 3)
    throw std::invalid_argument(
        "closed difference form starts at k+1 = 3; earlier values are "
        "anchors");
  const std::size_t K = k_plus_1; // Eq index k = K - 1 >= 2
  double t = 0.0, wj = 1.0;
  for (std::size_t j = 0; j + 2 <= K - 1; ++j) {
    t += wj * std::pow(sd.lambda, static_cast<double>(K - 3 - j));
    wj *= sd.w;
  }
  const double A = x1_2 - sd.w * x1_1;
  const double wk = std::pow(sd.w, static_cast<double>(K - 3));
  return wk * (sd.w - 1.0) * x1_2 + A * ((sd.lambda - 1.0) * t + wk) +
         sd.mu * t;
}

} // namespace detail

double forecast(const FittedModel &m, std::size_t k) {
  if (k < 1)
    throw DataError("forecast index must be >= 1");
  switch (m.kind) {
  case ModelKind::GM11: {
    if (k == 1)
      return m.head.x0_1;
    if (std::fabs(m.params.a) < kAZeroTol)
      return m.params.b;
    const double c = m.head.x0_1 - m.params.b / m.params.a;
    return c * std::expm1(-m.params.a) *
           std::exp(-m.params.a * static_cast<double>(k - 2));
  }
  case ModelKind::DGM11: {
    if (k == 1)
      return m.head.x0_1;
    if (std::fabs(1.0 - m.beta1) < kBeta1OneTol)
      return m.beta2; // arithmetic-progression limit of the recursion
    return std::pow(m.beta1, static_cast<double>(k - 2)) *
           ((m.beta1 - 1.0) * m.head.x1_1 + m.beta2);
  }
  case ModelKind::GM_SC: {
    if (k == 1)
      return m.head.x0_1;
    if (k == 2 && m.sc_init == ScInit::Anchored)
      return m.head.x0_2;
    if (std::fabs(m.params.a) < kAZeroTol)
      return m.params.b;
    const double c = m.head.x0_1 - m.params.b / m.params.a;
    return c * std::expm1(-m.params.a) *
           std::exp(-m.params.a * static_cast<double>(k - 2));
  }
  case ModelKind::GM_SD: {
    if (!m.sd)
      throw std::invalid_argument("GM_SD model lacks derived constants");
    if (k == 1)
      return m.head.x0_1;
    return detail::gmsd_cum(*m.sd, m.head.x1_1, m.head.x1_2, k) -
           detail::gmsd_cum(*m.sd, m.head.x1_1, m.head.x1_2, k - 1);
  }
  }
  throw std::logic_error("unreachable model kind");
}

std::vector<double> restored_series(const FittedModel &m, std::size_t upto) {
  std::vector<double> out(upto);
  for (std::size_t k = 1; k <= upto; ++k)
    out[k - 1] = forecast(m, k);
  return out;
}

std::vector<ExperimentEntry>
run_experiment(const Series &s, const SplitSpec &split,
               const std::vector<ModelKind> &kinds, ScInit sc_init) {
  split.validate(s.size());
  const std::size_t n = s.size();
  std::vector<ExperimentEntry> entries;
  entries.reserve(kinds.size());
  for (ModelKind kind : kinds) {
    ExperimentEntry entry;
    entry.kind = kind;
    try {
      const FittedModel m = fit_model(s, split, kind, sc_init);
      ForecastReport r;
      r.kind = kind;
      r.values = restored_series(m, n + split.horizon);
      r.ape.resize(n);
      for (std::size_t k = 1; k <= n; ++k)
        r.ape[k - 1] = ape(s.values()[k - 1], r.values[k - 1]);
      const std::size_t ell = m.anchor_count() + 1;
      r.simu_window = MetricWindow{ell, split.nu};
      r.over_window = MetricWindow{ell, n};
      r.mape_simu = mape(s.values(), r.values, r.simu_window);
      r.mape_over = mape(s.values(), r.values, r.over_window);
      r.pred_window = MetricWindow{split.nu + 1, n};
      r.mape_pred = split.nu < n
                        ? mape(s.values(), r.values, r.pred_window)
                        : std::numeric_limits<double>::quiet_NaN();
      entry.report = std::move(r);
    } catch (const DegenerateDataError &e) {
      entry.error = e.what();
    } catch (const DataError &e) {
      entry.error = e.what();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

} // namespace greysd
