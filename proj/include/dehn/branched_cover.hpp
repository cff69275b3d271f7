#pragma once

#include "dehn/manifold.hpp"
#include "dehn/slope.hpp"
#include "dehn/tangle.hpp"

namespace dehn {

/// Double branched cover of S^3 along a link, as a normalized manifold.
///
///   b(p, q)             -> L(p, q)
///   unknot              -> S3
///   n-component unlink  -> #^(n-1) S1xS2
///   mont(e; b_i/a_i)    -> Seifert space over S^2 with fibers (a_i, b_i)
///   connected sum       -> connected sum of covers
Manifold dbc_link(const LinkExpr& l);

/// Tangle filling parameter to Dehn filling slope. Identity: the same symbol
/// names both throughout, and a fixed reparameterization would act on every
/// slope of a family at once.
inline Slope fill_slope_map(const Slope& tangle_slope) { return tangle_slope; }

}  // namespace dehn
