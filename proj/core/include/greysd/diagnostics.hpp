#ifndef GREYSD_DIAGNOSTICS_HPP
#define GREYSD_DIAGNOSTICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "greysd/models.hpp"

namespace greysd {

// Inconsistency gauge of the continuous Simpson model:
//   phi(a) = (a + 3) + 4 a e^a + (a - 3) e^{2a}.
// phi(0) = 0 exactly, including in floating point.
double phi(double a);

// Residual by which the continuous response violates the Simpson
// difference equation: (1/3) (x0(1) - b/a) e^{-ak} phi(a); defined as 0
// at a = 0 where the violation vanishes.
double inconsistency_residual(double a, double b, double x0_1, std::size_t k);

// Closed-form parameters that the Simpson fit recovers exactly on the
// homogeneous exponential x0(k) = r q^k:
//   a = 3 (1 - q^2) / (1 + 4q + q^2),  b = 3 r q (1 + q) / (1 + 4q + q^2).
// Throws DataError for non-positive r or q and DegenerateDataError at
// q = 1 (a = 0, degenerate growth factor).
GreyParams oracle_params(double r, double q);

struct EpsilonCell {
  double r = 0.0;
  double q = 0.0;
  double epsilon = 0.0; // |a_hat - a| + |b_hat - b|; NaN on fit failure
};

// Recovery errors over an (r, q) collection.  For a cartesian sweep the
// cells are laid out row-major over (r_values x q_values); for the
// randomized sweep r_values is empty and each cell carries its own draw.
struct EpsilonGridResult {
  std::vector<double> r_values;
  std::vector<double> q_values;
  std::vector<EpsilonCell> cells;
  std::size_t n = 12;            // synthetic series length
  bool seeded = false;
  std::uint64_t seed = 0;
  double q_exclusion_radius = 0.005; // neighborhood of q = 1 kept out
  std::size_t failures = 0;      // cells whose fit did not converge

  double max_epsilon() const;
  EpsilonCell max_cell() const;
};

// Cartesian sweep: every (r, q) pair.  Synthesis, fitting and the
// oracle comparison all run in the extended accumulator precision so
// the result measures the estimator, not the synthesis round-off.
EpsilonGridResult epsilon_sweep(const std::vector<double> &r_values,
                                const std::vector<double> &q_values,
                                std::size_t n = 12);

// Randomized-r sweep: `draws_per_q` seeded uniform draws from [1, 15]
// for every q.
EpsilonGridResult epsilon_sweep_random_r(const std::vector<double> &q_values,
                                         std::size_t draws_per_q,
                                         std::uint64_t seed,
                                         std::size_t n = 12);

// Evenly spaced grid including both endpoints.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

// 50-point q grid on [0.1, 5]; the point landing on the excluded
// neighborhood of 1 is clamped to 1.005.
std::vector<double> desk_q_grid();

// Dense q grid on [0.1, 5] with step 0.01, the q = 1 cell removed.
std::vector<double> dense_q_grid();

// The two canonical sweeps: a 50x50 desk-scale grid (r linear in
// [1, 15]) and the reference configuration (dense q, 5 seeded r draws
// per q).
EpsilonGridResult run_desk_sweep(std::size_t n = 12);
inline constexpr std::uint64_t kDefaultSweepSeed = 42;
inline constexpr std::size_t kSweepDrawsPerQ = 5;
EpsilonGridResult run_reference_sweep(std::uint64_t seed = kDefaultSweepSeed,
                                      std::size_t n = 12);

// The a-grid of the phi reference table: 0.00, 0.05, ..., 1.00.
std::vector<double> phi_grid();

} // namespace greysd

#endif
