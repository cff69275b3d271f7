#pragma once

#include "dehn/integer.hpp"
#include "dehn/manifold.hpp"
#include "dehn/slope.hpp"

namespace dehn {

/// A cable space C(s, t) together with its cabling slope on the filled boundary.
class CableContext {
 public:
  /// Throws InvalidArgument unless t >= 2 and gcd(s, t) = 1 (t = 1 is T2xI).
  CableContext(Integer s, Integer t, Slope cabling_slope);

  const Integer& s() const noexcept { return s_; }
  const Integer& t() const noexcept { return t_; }
  const Slope& cabling_slope() const noexcept { return gamma_; }
  Manifold space() const { return cable_space(s_, t_); }

 private:
  Integer s_, t_;
  Slope gamma_;
};

struct CableFilling {
  Manifold result;
  Integer distance_to_cabling_slope;
  /// Set for the distance >= 2 branch, which is standard but not one of
  /// the two cases the construction arguments rely on.
  bool extension = false;
};

/// r = gamma         -> ST # L(t, s)
/// D(r, gamma) = 1   -> ST
/// D(r, gamma) = d   -> D2(t, d)  (extension)
CableFilling cable_fill(const CableContext& ctx, const Slope& r);

/// Meridian slopes of the two solid-torus fillings of a cable space are
/// |t| D(alpha, beta) apart on the inner torus.
Integer meridian_distance_cabled(const Integer& t, const Integer& delta_in);

/// Same pushforward through a C(u, v) cable: v^2 D.
Integer meridian_distance_squared(const Integer& v, const Integer& delta_in);

/// Lower bound w^2 on the meridian distance for a braid of winding number w >= 2.
Integer winding_bound(const Integer& w);

/// Replaces every solid-torus summand of m by its Dehn filling along r,
/// with the meridian of the solid torus taken to be 1/0.
Manifold cap_solid_torus(const Manifold& m, const Slope& r);

}  // namespace dehn
