#pragma once

#include "dehn/integer.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace dehn {

/// A slope on a torus: an element of Q u {inf} stored as a reduced pair.
///
/// Canonical form has q > 0, except infinity which is 1/0. p/q and -p/-q
/// name the same unoriented curve, so only one of them is ever stored.
class Slope {
 public:
  /// Reduces and normalizes; throws InvalidArgument on (0, 0).
  Slope(Integer p, Integer q);
  explicit Slope(long long n) : Slope(Integer(n), Integer(1)) {}

  static Slope infinity() { return Slope(1, 0); }

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  bool is_infinite() const noexcept { return q_ == 0; }
  bool is_integer() const noexcept { return q_ == 1; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b);

 private:
  Integer p_, q_;
};

inline Slope slope_make(const Integer& p, const Integer& q) { return Slope(p, q); }

/// Minimal geometric intersection number |p1 q2 - p2 q1|.
Integer slope_distance(const Slope& a, const Slope& b);

/// Finite continued fraction a1 + 1/(a2 + 1/(... + 1/an)).
/// The empty list stands for infinity.
struct ContinuedFraction {
  std::vector<Integer> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Euclidean expansion: first term is floor(p/q), every later term is
/// positive and the last term is at least 2 when there are two or more.
ContinuedFraction slope_to_cf(const Slope& r);

/// Exact evaluation. Throws InvalidArgument if a term after the first is zero.
Slope cf_to_slope(const ContinuedFraction& cf);

/// Row-major 2x2 integer matrix.
using IntMatrix2 = std::array<std::array<Integer, 2>, 2>;

/// (p, q) -> m (p, q), renormalized. Throws InvalidArgument unless |det m| = 1.
Slope slope_apply_unimodular(const IntMatrix2& m, const Slope& r);

/// "inf", "n" for integers, "p/q" otherwise.
std::string to_string(const Slope& r);

/// Accepts "p/q", "n" and "inf". Throws ParseError.
Slope parse_slope(std::string_view text);

}  // namespace dehn
