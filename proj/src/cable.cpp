#include "dehn/cable.hpp"

#include "dehn/error.hpp"

namespace dehn {

CableContext::CableContext(Integer s, Integer t, Slope cabling_slope)
    : s_(std::move(s)), t_(std::move(t)), gamma_(std::move(cabling_slope)) {
  if (t_ < 2) throw InvalidArgument("cable space needs t >= 2 (t = " + t_.str() + ")");
  if (gcd(s_, t_) != 1) throw InvalidArgument("cable space C(" + s_.str() + "," + t_.str() + ") is not coprime");
}

CableFilling cable_fill(const CableContext& ctx, const Slope& r) {
  Integer d = slope_distance(r, ctx.cabling_slope());
  if (d == 0) return {connected_sum({solid_torus(), lens_normalize(ctx.t(), ctx.s())}), d, false};
  if (d == 1) return {solid_torus(), d, false};
  return {sfs_normalize_orders(SfsBase::D2, {ctx.t(), d}), d, true};
}

Integer meridian_distance_cabled(const Integer& t, const Integer& delta_in) {
  if (t < 2) throw InvalidArgument("meridian_distance_cabled needs t >= 2");
  if (delta_in < 0) throw InvalidArgument("distance must be nonnegative");
  return abs(t) * delta_in;
}

Integer meridian_distance_squared(const Integer& v, const Integer& delta_in) {
  if (v < 2) throw InvalidArgument("meridian_distance_squared needs v >= 2");
  if (delta_in < 0) throw InvalidArgument("distance must be nonnegative");
  return v * v * delta_in;
}

Integer winding_bound(const Integer& w) {
  if (w < 2) throw InvalidArgument("winding_bound needs w >= 2");
  return w * w;
}

Manifold cap_solid_torus(const Manifold& m, const Slope& r) {
  // Filling S^1 x D^2 along p/q with meridian 1/0 gives L(q, p).
  auto cap = [&] { return lens_normalize(r.q(), r.p()); };
  if (m.is<shape::SolidTorus>()) return cap();
  if (auto* cs = m.get_if<shape::ConnSum>()) {
    std::vector<Manifold> parts;
    for (const auto& s : cs->summands) parts.push_back(s.is<shape::SolidTorus>() ? cap() : s);
    return connected_sum(std::move(parts));
  }
  return m;
}

}  // namespace dehn
