#include "greysd/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "greysd/detail/fit_kernels.hpp"
#include "greysd/errors.hpp"

namespace greysd {

double phi(double a) {
  const double ea = std::exp(a);
  return (a + 3.0) + 4.0 * a * ea + (a - 3.0) * ea * ea;
}

double inconsistency_residual(double a, double b, double x0_1,
                              std::size_t k) {
  if (a == 0.0)
    return 0.0; // phi(0) = 0 and the violation vanishes
  return (1.0 / 3.0) * (x0_1 - b / a) *
         std::exp(-a * static_cast<double>(k)) * phi(a);
}

GreyParams oracle_params(double r, double q) {
  if (!(r > 0.0))
    throw DataError("oracle parameters need r > 0");
  if (!(q > 0.0))
    throw DataError("oracle parameters need q > 0");
  if (q == 1.0)
    throw DegenerateDataError(
        "oracle parameters undefined at q = 1 (degenerate growth factor, "
        "a = 0)");
  const double denom = 1.0 + 4.0 * q + q * q;
  return GreyParams{3.0 * (1.0 - q * q) / denom,
                    3.0 * r * q * (1.0 + q) / denom};
}

double EpsilonGridResult::max_epsilon() const { return max_cell().epsilon; }

EpsilonCell EpsilonGridResult::max_cell() const {
  EpsilonCell best;
  best.epsilon = -1.0;
  for (const EpsilonCell &c : cells)
    if (!std::isnan(c.epsilon) && c.epsilon > best.epsilon)
      best = c;
  if (best.epsilon < 0.0)
    best.epsilon = std::numeric_limits<double>::quiet_NaN();
  return best;
}

namespace {

using detail::acc_t;

// One recovery cell, entirely in the extended accumulator type: the
// synthetic sequence r q^k, the Simpson fit, and the closed-form
// parameters.  Synthesizing in double first would floor the error near
// 4e-9 regardless of the estimator; the point of the sweep is to
// measure the estimator.
double epsilon_cell(double r, double q, std::size_t n) {
  if (q == 1.0)
    throw DegenerateDataError(
        "oracle parameters undefined at q = 1 (degenerate growth factor, "
        "a = 0)");
  const acc_t rq = static_cast<acc_t>(r);
  const acc_t qq = static_cast<acc_t>(q);
  std::vector<acc_t> x(n);
  acc_t v = rq;
  for (std::size_t k = 0; k < n; ++k) {
    v *= qq;
    x[k] = v; // x(k+1) = r q^{k+1}
  }
  const auto [a_hat, b_hat] = detail::fit_simpson_params(x, n);
  const acc_t denom = acc_t(1) + acc_t(4) * qq + qq * qq;
  const acc_t a = acc_t(3) * (acc_t(1) - qq * qq) / denom;
  const acc_t b = acc_t(3) * rq * qq * (acc_t(1) + qq) / denom;
  const acc_t eps = detail::fp_abs(a_hat - a) + detail::fp_abs(b_hat - b);
  return static_cast<double>(eps);
}

EpsilonCell run_cell(double r, double q, std::size_t n,
                     std::size_t &failures) {
  EpsilonCell cell;
  cell.r = r;
  cell.q = q;
  try {
    cell.epsilon = epsilon_cell(r, q, n);
  } catch (const DegenerateDataError &) {
    cell.epsilon = std::numeric_limits<double>::quiet_NaN();
    ++failures;
  }
  return cell;
}

} // namespace

EpsilonGridResult epsilon_sweep(const std::vector<double> &r_values,
                                const std::vector<double> &q_values,
                                std::size_t n) {
  if (r_values.empty() || q_values.empty())
    throw DataError("epsilon sweep needs nonempty grids");
  EpsilonGridResult res;
  res.r_values = r_values;
  res.q_values = q_values;
  res.n = n;
  res.cells.reserve(r_values.size() * q_values.size());
  for (double r : r_values)
    for (double q : q_values)
      res.cells.push_back(run_cell(r, q, n, res.failures));
  return res;
}

EpsilonGridResult epsilon_sweep_random_r(const std::vector<double> &q_values,
                                         std::size_t draws_per_q,
                                         std::uint64_t seed, std::size_t n) {
  if (q_values.empty() || draws_per_q == 0)
    throw DataError("epsilon sweep needs nonempty grids");
  EpsilonGridResult res;
  res.q_values = q_values;
  res.n = n;
  res.seeded = true;
  res.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> r_dist(1.0, 15.0);
  res.cells.reserve(q_values.size() * draws_per_q);
  for (double q : q_values)
    for (std::size_t i = 0; i < draws_per_q; ++i)
      res.cells.push_back(run_cell(r_dist(rng), q, n, res.failures));
  return res;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (count < 2)
    throw DataError("grid needs at least 2 points");
  std::vector<double> g(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::vector<double> desk_q_grid() {
  std::vector<double> g = linear_grid(0.1, 5.0, 50);
  for (double &q : g)
    if (std::fabs(q - 1.0) < 0.005)
      q = 1.005; // clamp out of the excluded neighborhood of 1
  return g;
}

std::vector<double> dense_q_grid() {
  std::vector<double> g;
  g.reserve(491);
  for (int i = 10; i <= 500; ++i) {
    const double q = static_cast<double>(i) / 100.0;
    if (std::fabs(q - 1.0) < 0.005)
      continue;
    g.push_back(q);
  }
  return g;
}

EpsilonGridResult run_desk_sweep(std::size_t n) {
  return epsilon_sweep(linear_grid(1.0, 15.0, 50), desk_q_grid(), n);
}

EpsilonGridResult run_reference_sweep(std::uint64_t seed, std::size_t n) {
  return epsilon_sweep_random_r(dense_q_grid(), kSweepDrawsPerQ, seed, n);
}

std::vector<double> phi_grid() {
  std::vector<double> g(21);
  for (int i = 0; i <= 20; ++i)
    g[i] = static_cast<double>(i) * 0.05;
  return g;
}

} // namespace greysd
