#ifndef GREYSD_SOLVER_HPP
#define GREYSD_SOLVER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greysd/errors.hpp"

namespace greysd {

namespace detail {

// Accumulator type for normal-equation sums.  Quad precision where the
// compiler provides it (pure arithmetic only -- no libquadmath needed);
// extended precision otherwise.
#if defined(__SIZEOF_FLOAT128__)
using acc_t = __float128;
#else
using acc_t = long double;
#endif

template <class FP> inline FP fp_abs(FP v) { return v < FP(0) ? -v : v; }

template <class FP> inline FP fp_max(FP a, FP b) { return a < b ? b : a; }

// Running sums for the 2x2 normal equations of a two-column design
// matrix: rows (c1, c2) -> y.
template <class FP> struct normal_accum {
  FP s11 = FP(0); // sum c1*c1
  FP s12 = FP(0); // sum c1*c2
  FP s22 = FP(0); // sum c2*c2
  FP t1 = FP(0);  // sum c1*y
  FP t2 = FP(0);  // sum c2*y
  std::size_t rows = 0;

  void add(FP c1, FP c2, FP y) {
    s11 += c1 * c1;
    s12 += c1 * c2;
    s22 += c2 * c2;
    t1 += c1 * y;
    t2 += c2 * y;
    ++rows;
  }
};

// Relative determinant guard for the closed-form 2x2 solve.  The scale
// max(|s11*s22|, s12^2) makes the test invariant under rescaling of the
// data, catching constant and otherwise rank-deficient designs.
inline constexpr double kDetGuard = 1e-12;

template <class FP>
std::pair<FP, FP> solve_2x2(const normal_accum<FP> &acc, const char *context) {
  if (acc.rows < 2)
    throw std::invalid_argument("solve_normal_2x2: need at least 2 rows");
  const FP det = acc.s11 * acc.s22 - acc.s12 * acc.s12;
  const FP scale = fp_max(fp_abs(acc.s11 * acc.s22), acc.s12 * acc.s12);
  if (!(fp_abs(det) >= FP(kDetGuard) * scale) || !(scale > FP(0)))
    throw DegenerateDataError(std::string(context) +
                              ": singular normal equations (degenerate or "
                              "constant design)");
  const FP u = (acc.s22 * acc.t1 - acc.s12 * acc.t2) / det;
  const FP v = (acc.s11 * acc.t2 - acc.s12 * acc.t1) / det;
  return {u, v};
}

} // namespace detail

// One least-squares row: design entries (c1, c2), target y.
struct LsRow {
  double c1;
  double c2;
  double y;
};

// Least-squares solution of the two-column system via the closed-form
// normal equations, accumulated in extended precision.  `context` names
// the model in the degenerate-data error message.
std::pair<double, double> solve_normal_2x2(const std::vector<LsRow> &rows,
                                           const std::string &context);

} // namespace greysd

#endif
