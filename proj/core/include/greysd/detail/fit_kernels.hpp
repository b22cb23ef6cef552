#ifndef GREYSD_DETAIL_FIT_KERNELS_HPP
#define GREYSD_DETAIL_FIT_KERNELS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "greysd/solver.hpp"

// Templated row builders for the three least-squares fits.  The
// template parameter is the arithmetic type: production fits run these
// with the extended accumulator type on double data, while the
// parameter-recovery sweep runs them end-to-end in quad precision (the
// kernels use arithmetic only, so no quad math library is required).

namespace greysd::detail {

// Prefix sums (1-AGO) in the kernel's arithmetic type.
template <class FP>
std::vector<FP> prefix_sums_fp(const std::vector<FP> &x, std::size_t upto) {
  std::vector<FP> c(upto);
  FP run = FP(0);
  for (std::size_t i = 0; i < upto; ++i) {
    run += x[i];
    c[i] = run;
  }
  return c;
}

// Classical fit: rows (-z1(t), 1) -> x0(t) for t = 2..nu with the
// trapezoid background z1(t) = (x1(t) + x1(t-1)) / 2.
template <class FP>
std::pair<FP, FP> fit_gm11_params(const std::vector<FP> &x, std::size_t nu) {
  const std::vector<FP> c = prefix_sums_fp(x, nu);
  normal_accum<FP> acc;
  for (std::size_t t = 2; t <= nu; ++t) {
    const FP z = (c[t - 1] + c[t - 2]) / FP(2);
    acc.add(-z, FP(1), x[t - 1]);
  }
  return solve_2x2(acc, "gm11");
}

// Discrete fit: rows (x1(k), 1) -> x1(k+1) for k = 1..nu-1.
template <class FP>
std::pair<FP, FP> fit_dgm11_params(const std::vector<FP> &x, std::size_t nu) {
  const std::vector<FP> c = prefix_sums_fp(x, nu);
  normal_accum<FP> acc;
  for (std::size_t k = 1; k + 1 <= nu; ++k)
    acc.add(c[k - 1], FP(1), c[k]);
  return solve_2x2(acc, "dgm11");
}

// Simpson fit shared by the continuous and discrete Simpson models:
// rows (-(x1(k-1) + 4 x1(k) + x1(k+1)) / 6, 1) -> (x0(k) + x0(k+1)) / 2
// for k = 2..nu-1.
template <class FP>
std::pair<FP, FP> fit_simpson_params(const std::vector<FP> &x,
                                     std::size_t nu) {
  const std::vector<FP> c = prefix_sums_fp(x, nu);
  normal_accum<FP> acc;
  for (std::size_t k = 2; k + 1 <= nu; ++k) {
    const FP z6 = (c[k - 2] + FP(4) * c[k - 1] + c[k]) / FP(6);
    const FP y = (x[k - 1] + x[k]) / FP(2);
    acc.add(-z6, FP(1), y);
  }
  return solve_2x2(acc, "simpson");
}

} // namespace greysd::detail

#endif
