#include "greysd/metrics.hpp"

#include <cmath>
#include <string>

#include "greysd/errors.hpp"

namespace greysd {

double ape(double actual, double predicted) {
  if (!(actual > 0.0))
    throw DataError("APE needs a strictly positive actual value");
  return std::fabs((actual - predicted) / actual) * 100.0;
}

double mape(const std::vector<double> &actuals,
            const std::vector<double> &predictions, const MetricWindow &w) {
  if (w.ell < 2)
    throw DataError("error window must start at index 2 or later");
  if (w.ell > w.m)
    throw DataError("empty error window [" + std::to_string(w.ell) + ", " +
                    std::to_string(w.m) + "]");
  if (w.m > actuals.size() || w.m > predictions.size())
    throw DataError("error window end " + std::to_string(w.m) +
                    " exceeds available values");
  double sum = 0.0;
  for (std::size_t k = w.ell; k <= w.m; ++k)
    sum += ape(actuals[k - 1], predictions[k - 1]);
  return sum / static_cast<double>(w.count());
}

} // namespace greysd
