#include "greysd/digest.hpp"

#include <cstdio>

namespace greysd {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t values_digest(const std::vector<double> &values,
                            std::size_t count) {
  std::string joined;
  for (std::size_t i = 0; i < count && i < values.size(); ++i) {
    if (i)
      joined += ',';
    joined += num17(values[i]);
  }
  return fnv1a64(joined);
}

} // namespace greysd
