#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace dehn {

/// Exact signed integer used for every slope, lens and fiber parameter.
using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Floor division; b != 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Representative of a mod m in [0, |m|); m != 0.
Integer mod(const Integer& a, const Integer& m);

/// Inverse of a modulo m (m >= 2), in [0, m). Requires gcd(a, m) = 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
  Integer g, x, y;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace dehn
