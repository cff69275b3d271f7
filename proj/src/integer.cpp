#include "dehn/integer.hpp"

#include "dehn/error.hpp"

namespace dehn {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidArgument("floor_div by zero");
  Integer quotient = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --quotient;
  return quotient;
}

Integer mod(const Integer& a, const Integer& m) {
  if (m == 0) throw InvalidArgument("mod by zero");
  Integer n = abs(m);
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quotient * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  auto [g, x, y] = extended_gcd(mod(a, m), m);
  if (g != 1) throw InvalidArgument("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
  return mod(x, m);
}

}  // namespace dehn
