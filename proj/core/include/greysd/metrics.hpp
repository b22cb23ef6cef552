#ifndef GREYSD_METRICS_HPP
#define GREYSD_METRICS_HPP

#include <cstddef>
#include <vector>

namespace greysd {

// Absolute percentage error |(actual - predicted) / actual| * 100.
// Throws DataError when actual is not strictly positive.
double ape(double actual, double predicted);

// Index window [ell, m], 1-based inclusive.  The first index is never
// part of an error window (every model echoes the first observation),
// so ell >= 2.
struct MetricWindow {
  std::size_t ell;
  std::size_t m;
  std::size_t count() const { return m - ell + 1; }
};

// Mean APE over the window.  `actuals` and `predictions` are 0-based
// vectors covering at least m entries.  Throws DataError on an invalid
// or uncovered window.
double mape(const std::vector<double> &actuals,
            const std::vector<double> &predictions, const MetricWindow &w);

} // namespace greysd

#endif
