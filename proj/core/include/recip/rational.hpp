#ifndef RECIP_RATIONAL_HPP
#define RECIP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace recip {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// Parses "p/q", "p", or "-p/q".
Rat parse_rational(const std::string& s);

// Renders as "p" or "p/q".
std::string rational_str(const Rat& r);

// Nearest rational to x with denominator growth bounded so that
// |x - p/q| <= tol.  Continued-fraction expansion.
Rat rationalize(double x, double tol = 1e-9);

}  // namespace recip

#endif
