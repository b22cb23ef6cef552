#ifndef GREYSD_TESTS_SUPPORT_HPP
#define GREYSD_TESTS_SUPPORT_HPP

#include <cmath>
#include <string>

namespace testutil {

// Relative error against the expected value; absolute when the
// expectation is exactly zero.
inline double rel_err(double got, double want) {
  if (want == 0.0)
    return std::fabs(got);
  return std::fabs((got - want) / want);
}

// Runs f, expecting it to throw E, and returns the message.  An empty
// string means nothing (or the wrong type) was thrown, which makes any
// substring assertion on the result fail loudly.
template <class E, class F> std::string thrown_message(F &&f) {
  try {
    f();
  } catch (const E &e) {
    return e.what();
  } catch (...) {
  }
  return "";
}

inline bool contains(const std::string &text, const std::string &needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace testutil

#endif
