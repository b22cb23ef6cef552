#include "greysd/series.hpp"

#include <string>
#include <utility>

#include "greysd/errors.hpp"

namespace greysd {

Series::Series(std::vector<double> values) : values_(std::move(values)) {
  validate();
}

Series::Series(std::vector<double> values, std::vector<std::string> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != values_.size())
    throw DataError("series labels count (" + std::to_string(labels_.size()) +
                    ") does not match values count (" +
                    std::to_string(values_.size()) + ")");
  validate();
}

void Series::validate() const {
  if (values_.size() < kMinSeriesLength)
    throw DataError("series needs at least " +
                    std::to_string(kMinSeriesLength) + " values, got " +
                    std::to_string(values_.size()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0))
      throw DataError("series value at index " + std::to_string(i + 1) +
                      " must be strictly positive");
  }
}

double Series::at1(std::size_t k) const {
  if (k < 1 || k > values_.size())
    throw DataError("series index " + std::to_string(k) +
                    " out of range 1.." + std::to_string(values_.size()));
  return values_[k - 1];
}

CumSeries::CumSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty())
    throw DataError("accumulated series must be nonempty");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] < values_[i - 1])
      throw DataError("accumulated series decreases at index " +
                      std::to_string(i + 1));
  }
}

double CumSeries::at1(std::size_t k) const {
  if (k < 1 || k > values_.size())
    throw DataError("accumulated index " + std::to_string(k) +
                    " out of range 1.." + std::to_string(values_.size()));
  return values_[k - 1];
}

std::vector<double> prefix_sums(const std::vector<double> &x) {
  std::vector<double> c(x.size());
  double run = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    run += x[i];
    c[i] = run;
  }
  return c;
}

std::vector<double> first_differences(const std::vector<double> &c) {
  std::vector<double> x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    x[i] = i == 0 ? c[0] : c[i] - c[i - 1];
  return x;
}

CumSeries ago(const Series &s) { return CumSeries(prefix_sums(s.values())); }

std::vector<double> iago(const CumSeries &c) {
  return first_differences(c.values());
}

double background_mean(const CumSeries &c, std::size_t k) {
  if (k < 2 || k > c.size())
    throw DataError("background index " + std::to_string(k) +
                    " out of range 2.." + std::to_string(c.size()));
  return (c.values()[k - 1] + c.values()[k - 2]) / 2.0;
}

double background_simpson(const CumSeries &c, std::size_t k) {
  if (k < 2 || k + 1 > c.size())
    throw DataError("Simpson background index " + std::to_string(k) +
                    " out of range 2.." + std::to_string(c.size() - 1));
  return (c.values()[k - 2] + 4.0 * c.values()[k - 1] + c.values()[k]) / 3.0;
}

} // namespace greysd
