#ifndef GREYSD_ERRORS_HPP
#define GREYSD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace greysd {

// Invalid input data: series too short, non-positive values, malformed
// CSV, unknown fixture names, bad JSON documents.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

// Numerically degenerate input: singular normal equations, derived
// constants undefined (a = -3 or w = 0 for the Simpson-discrete model),
// degenerate growth factor q = 1 in the closed-form oracle.
class DegenerateDataError : public std::runtime_error {
public:
  explicit DegenerateDataError(const std::string &what)
      : std::runtime_error(what) {}
};

} // namespace greysd

#endif
