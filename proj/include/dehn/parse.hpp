#pragma once

#include "dehn/manifold.hpp"
#include "dehn/slope.hpp"
#include "dehn/tangle.hpp"

#include <string_view>

namespace dehn {

/// Manifold expressions:
///
///   S3  L(p,q)  S2(a,b,c,...)  D2(a,b,...)  M2(c,...)  S1xS2  ST  T2xI
///   C(s,t)  ZxS1  SFS(e; b1/a1, ...)  <label>  U[m1, m2, ...]  A # B
///
/// Parentheses group. The result is normalized. Syntax errors and
/// semantic errors (such as L(4,2)) throw ParseError with the offending position.
Manifold parse_manifold(std::string_view text);

}  // namespace dehn
