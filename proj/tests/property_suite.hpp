#ifndef GREYSD_TESTS_PROPERTY_SUITE_HPP
#define GREYSD_TESTS_PROPERTY_SUITE_HPP

// Randomized invariants, shared between the unit runner and the
// acceptance runner.  Every property draws its cases from a fixed seed,
// so a reported failure replays deterministically.
//
// Fit-related properties synthesize near-exponential data
// r q^k (1 + noise), the regime grey models are meant for; that keeps
// every normal-equation design well conditioned, and a degenerate draw
// (should one occur) is counted as a skip rather than a failure.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "greysd/errors.hpp"
#include "greysd/metrics.hpp"
#include "greysd/models.hpp"
#include "greysd/series.hpp"

namespace propsuite {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;    // instances actually checked
  std::size_t skipped = 0;  // instances or inner checks skipped
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

namespace detail {

inline double log_uniform(std::mt19937_64 &rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline std::vector<double> positive_values(std::mt19937_64 &rng,
                                           std::size_t n) {
  std::vector<double> x(n);
  for (double &v : x)
    v = log_uniform(rng, 0.5, 20.0);
  return x;
}

// r q^k with +-20 percent multiplicative noise.
inline std::vector<double> grey_values(std::mt19937_64 &rng, std::size_t n) {
  const double r = log_uniform(rng, 0.5, 50.0);
  const double q = log_uniform(rng, 0.85, 1.3);
  std::uniform_real_distribution<double> noise(-0.2, 0.2);
  std::vector<double> x(n);
  double v = r;
  for (std::size_t i = 0; i < n; ++i) {
    v *= q;
    x[i] = v * (1.0 + noise(rng));
  }
  return x;
}

inline double rel_gap(double u, double v) {
  const double scale = std::max(std::fabs(u), std::fabs(v));
  if (scale == 0.0)
    return 0.0;
  return std::fabs(u - v) / scale;
}

template <class Fail>
void record(PropertyResult &r, std::size_t case_no, Fail &&describe) {
  ++r.failures;
  if (r.first_failure.empty()) {
    std::ostringstream os;
    os << "case " << case_no << ": ";
    describe(os);
    r.first_failure = os.str();
  }
}

} // namespace detail

// Accumulation followed by inverse accumulation restores the input.
inline PropertyResult check_ago_iago_roundtrip(std::size_t cases = 1000) {
  PropertyResult res;
  res.name = "ago/iago round trip";
  std::mt19937_64 rng(0x5eed0001ULL);
  std::uniform_int_distribution<std::size_t> len(4, 40);
  for (std::size_t c = 0; c < cases; ++c) {
    const greysd::Series s(detail::positive_values(rng, len(rng)));
    const std::vector<double> back = greysd::iago(greysd::ago(s));
    ++res.cases;
    for (std::size_t i = 0; i < back.size(); ++i) {
      if (detail::rel_gap(back[i], s.values()[i]) > 1e-12) {
        detail::record(res, c, [&](std::ostream &os) {
          os << "index " << i + 1 << ": " << back[i]
             << " != " << s.values()[i];
        });
        break;
      }
    }
  }
  return res;
}

// Multiplying the data by alpha leaves the development coefficients
// unchanged and scales the grey inputs and all restored values.
inline PropertyResult check_scale_equivariance(std::size_t cases = 1000) {
  using namespace greysd;
  PropertyResult res;
  res.name = "scale equivariance of the fits";
  std::mt19937_64 rng(0x5eed0002ULL);
  std::uniform_int_distribution<std::size_t> len(6, 16);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = len(rng);
    const std::vector<double> base = detail::grey_values(rng, n);
    const double alpha = detail::log_uniform(rng, 1e-3, 1e3);
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i)
      scaled[i] = alpha * base[i];
    const Series s0(base), s1(scaled);
    const SplitSpec split{n, 0};
    bool bad = false;
    try {
      for (const ModelKind kind : all_model_kinds()) {
        const FittedModel m0 = fit_model(s0, split, kind);
        const FittedModel m1 = fit_model(s1, split, kind);
        if (kind == ModelKind::DGM11) {
          bad = bad || std::fabs(m1.beta1 - m0.beta1) > 1e-10 ||
                detail::rel_gap(m1.beta2, alpha * m0.beta2) > 1e-10;
        } else {
          bad = bad || std::fabs(m1.params.a - m0.params.a) > 1e-10 ||
                detail::rel_gap(m1.params.b, alpha * m0.params.b) > 1e-10;
        }
        if (kind == ModelKind::GM_SD) {
          bad = bad || std::fabs(m1.sd->w - m0.sd->w) > 1e-10 ||
                std::fabs(m1.sd->lambda - m0.sd->lambda) > 1e-10 ||
                detail::rel_gap(m1.sd->mu, alpha * m0.sd->mu) > 1e-10;
        }
        for (const std::size_t k : {std::size_t(2), n, n + 3}) {
          if (detail::rel_gap(forecast(m1, k), alpha * forecast(m0, k)) >
              1e-10)
            bad = true;
        }
      }
    } catch (const DegenerateDataError &) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    if (bad)
      detail::record(res, c,
                     [&](std::ostream &os) { os << "alpha = " << alpha; });
  }
  return res;
}

// The summed recurrence solution and the closed difference form of the
// Simpson-discrete model are the same function.
inline PropertyResult check_sum_vs_closed_restored(std::size_t cases = 1000) {
  using namespace greysd;
  PropertyResult res;
  res.name = "summed vs closed Simpson-discrete restored form";
  std::mt19937_64 rng(0x5eed0003ULL);
  std::uniform_int_distribution<std::size_t> len(6, 14);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = len(rng);
    const Series s(detail::grey_values(rng, n));
    FittedModel m;
    try {
      m = fit_simpson(s, SplitSpec{n, 0}, ModelKind::GM_SD);
    } catch (const DegenerateDataError &) {
      ++res.skipped;
      continue;
    }
    bool bad = false;
    std::size_t k_bad = 0;
    for (std::size_t k = 3; k <= 52; ++k) {
      const double by_sum = forecast(m, k);
      const double closed = greysd::detail::gmsd_restored_closed(
          *m.sd, m.head.x1_1, m.head.x1_2, k);
      // Differencing two nearly equal accumulated values can cancel;
      // such indexes carry no precision to compare and are skipped.
      const double cum = greysd::detail::gmsd_cum(*m.sd, m.head.x1_1,
                                                  m.head.x1_2, k);
      if (std::max(std::fabs(by_sum), std::fabs(closed)) <
          1e-6 * std::fabs(cum)) {
        ++res.skipped;
        continue;
      }
      ++res.cases;
      if (detail::rel_gap(by_sum, closed) > 1e-9) {
        bad = true;
        k_bad = k;
        break;
      }
    }
    if (bad)
      detail::record(res, c, [&](std::ostream &os) {
        os << "k = " << k_bad << ", a = " << m.params.a;
      });
  }
  return res;
}

// Differencing the classical response function equals its closed
// restored form.
inline PropertyResult check_response_vs_closed_gm11(std::size_t cases = 1000) {
  using namespace greysd;
  PropertyResult res;
  res.name = "classical response difference vs closed form";
  std::mt19937_64 rng(0x5eed0004ULL);
  std::uniform_int_distribution<std::size_t> len(5, 14);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = len(rng);
    const Series s(detail::grey_values(rng, n));
    FittedModel m;
    try {
      m = fit_gm11(s, SplitSpec{n, 0});
    } catch (const DegenerateDataError &) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    for (std::size_t k = 2; k <= n + 10; ++k) {
      const double closed =
          greysd::detail::gm11_restored_closed(m.params, m.head.x0_1, k);
      if (detail::rel_gap(closed, forecast(m, k)) > 1e-9) {
        detail::record(res, c, [&](std::ostream &os) {
          os << "k = " << k << ", a = " << m.params.a;
        });
        break;
      }
    }
  }
  return res;
}

// The restored accumulated series of the Simpson-discrete model
// satisfies its own defining difference equation at every index.
inline PropertyResult check_sd_difference_identity(std::size_t cases = 1000) {
  using namespace greysd;
  PropertyResult res;
  res.name = "Simpson-discrete difference-equation identity";
  std::mt19937_64 rng(0x5eed0005ULL);
  std::uniform_int_distribution<std::size_t> len(6, 20);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = len(rng);
    const Series s(detail::grey_values(rng, n));
    FittedModel m;
    try {
      m = fit_simpson(s, SplitSpec{n, 0}, ModelKind::GM_SD);
    } catch (const DegenerateDataError &) {
      ++res.skipped;
      continue;
    }
    ++res.cases;
    std::vector<double> cum(n + 3);
    for (std::size_t j = 1; j <= n + 2; ++j)
      cum[j - 1] = greysd::detail::gmsd_cum(*m.sd, m.head.x1_1,
                                            m.head.x1_2, j);
    const double a = m.params.a, b = m.params.b;
    for (std::size_t k = 2; k <= n + 1; ++k) {
      const double y = (cum[k] - cum[k - 2]) / 2.0;
      const double z = (cum[k - 2] + 4.0 * cum[k - 1] + cum[k]) / 6.0;
      const double lhs = y + a * z;
      const double scale = std::max(
          {std::fabs(b), std::fabs(a) * std::fabs(z), std::fabs(y)});
      if (std::fabs(lhs - b) > 1e-9 * scale) {
        detail::record(res, c, [&](std::ostream &os) {
          os << "k = " << k << ": residual " << lhs - b << " vs scale "
             << scale;
        });
        break;
      }
    }
  }
  return res;
}

// The overall error mean is the count-weighted mean of the simulation
// and prediction means.
inline PropertyResult check_mape_window_identity(std::size_t cases = 1000) {
  using namespace greysd;
  PropertyResult res;
  res.name = "error-mean window identity";
  std::mt19937_64 rng(0x5eed0006ULL);
  std::uniform_int_distribution<std::size_t> len(6, 20);
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = len(rng);
    const Series s(detail::grey_values(rng, n));
    std::uniform_int_distribution<std::size_t> cut(4, n - 1);
    const SplitSpec split{cut(rng), 0};
    const auto entries = run_experiment(s, split, all_model_kinds());
    bool counted = false;
    for (const ExperimentEntry &e : entries) {
      if (!e.report) {
        ++res.skipped;
        continue;
      }
      counted = true;
      const ForecastReport &r = *e.report;
      const double ns = static_cast<double>(r.simu_window.count());
      const double np = static_cast<double>(r.pred_window.count());
      const double blended =
          (ns * r.mape_simu + np * r.mape_pred) / (ns + np);
      if (detail::rel_gap(blended, r.mape_over) > 1e-10) {
        detail::record(res, c, [&](std::ostream &os) {
          os << to_string(e.kind) << ": blended " << blended << " vs "
             << r.mape_over;
        });
        break;
      }
    }
    if (counted)
      ++res.cases;
  }
  return res;
}

inline std::vector<PropertyResult>
run_property_suite(std::size_t cases = 1000) {
  return {check_ago_iago_roundtrip(cases),
          check_scale_equivariance(cases),
          check_sum_vs_closed_restored(cases),
          check_response_vs_closed_gm11(cases),
          check_sd_difference_identity(cases),
          check_mape_window_identity(cases)};
}

} // namespace propsuite

#endif
