#include "greysd/solver.hpp"

namespace greysd {

std::pair<double, double> solve_normal_2x2(const std::vector<LsRow> &rows,
                                           const std::string &context) {
  detail::normal_accum<detail::acc_t> acc;
  for (const LsRow &r : rows)
    acc.add(static_cast<detail::acc_t>(r.c1), static_cast<detail::acc_t>(r.c2),
            static_cast<detail::acc_t>(r.y));
  auto [u, v] = detail::solve_2x2(acc, context.c_str());
  return {static_cast<double>(u), static_cast<double>(v)};
}

} // namespace greysd
