#ifndef GREYSD_SERIES_HPP
#define GREYSD_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace greysd {

// Two least-squares rows are the minimum for a well-posed two-parameter
// fit, and the Simpson background produces one row per interior index
// k = 2..n-1, hence four points minimum.
inline constexpr std::size_t kMinSeriesLength = 4;

// Raw observation sequence X0 = (x0(1), ..., x0(n)).
//
// All indices in documentation and error messages are 1-based.  Values
// must be strictly positive: percentage errors divide by x0(k), and the
// grey models assume a positive series throughout.
class Series {
public:
  explicit Series(std::vector<double> values);
  Series(std::vector<double> values, std::vector<std::string> labels);

  std::size_t size() const { return values_.size(); }
  const std::vector<double> &values() const { return values_; }

  // 1-based access; throws DataError when k is out of range.
  double at1(std::size_t k) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string> &labels() const { return labels_; }

private:
  std::vector<double> values_;
  std::vector<std::string> labels_; // empty when unlabeled
  void validate() const;
};

// First-order accumulated series X1, x1(k) = sum_{i=1..k} x0(i).
// Nondecreasing by construction (all source values are positive).
class CumSeries {
public:
  explicit CumSeries(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double> &values() const { return values_; }
  double at1(std::size_t k) const;

private:
  std::vector<double> values_;
};

// Accumulation and its inverse.
CumSeries ago(const Series &s);
std::vector<double> iago(const CumSeries &c);

// Low-level helpers on plain vectors (shared with the fit kernels).
std::vector<double> prefix_sums(const std::vector<double> &x);
std::vector<double> first_differences(const std::vector<double> &c);

// Classical background value z1(t) = (x1(t) + x1(t-1)) / 2, 2 <= t <= n.
double background_mean(const CumSeries &c, std::size_t k);

// Simpson background value z1(k) = (x1(k-1) + 4 x1(k) + x1(k+1)) / 3,
// 2 <= k <= n-1.
double background_simpson(const CumSeries &c, std::size_t k);

} // namespace greysd

#endif
