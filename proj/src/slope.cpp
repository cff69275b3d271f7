#include "dehn/slope.hpp"

#include "dehn/error.hpp"

#include <cctype>
#include <utility>

namespace dehn {

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw InvalidArgument("slope 0/0 is not a slope");
  Integer g = gcd(p_, q_);
  p_ /= g;
  q_ /= g;
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

bool operator<(const Slope& a, const Slope& b) {
  // Finite slopes by value, infinity last.
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  return a.p() * b.q() < b.p() * a.q();
}

Integer slope_distance(const Slope& a, const Slope& b) {
  return abs(a.p() * b.q() - b.p() * a.q());
}

ContinuedFraction slope_to_cf(const Slope& r) {
  ContinuedFraction cf;
  Integer p = r.p(), q = r.q();
  while (q != 0) {
    Integer a = floor_div(p, q);
    cf.terms.push_back(a);
    Integer rem = p - a * q;
    p = q;
    q = rem;
  }
  return cf;
}

Slope cf_to_slope(const ContinuedFraction& cf) {
  // Convergent recurrence h_n = a_n h_{n-1} + h_{n-2}.
  Integer h_prev = 0, h = 1;
  Integer k_prev = 1, k = 0;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    const Integer& a = cf.terms[i];
    if (i > 0 && a == 0)
      throw InvalidArgument("continued fraction term " + std::to_string(i) + " is zero");
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return Slope(h, k);
}

Slope slope_apply_unimodular(const IntMatrix2& m, const Slope& r) {
  Integer det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (abs(det) != 1) throw InvalidArgument("matrix is not unimodular (det " + det.str() + ")");
  return Slope(m[0][0] * r.p() + m[0][1] * r.q(), m[1][0] * r.p() + m[1][1] * r.q());
}

std::string to_string(const Slope& r) {
  if (r.is_infinite()) return "inf";
  if (r.is_integer()) return r.p().str();
  return r.p().str() + "/" + r.q().str();
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

Integer parse_signed(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw ParseError("expected integer", offset + i);
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("unexpected character '" + std::string(1, s[j]) + "'", offset + j);
  Integer v(std::string(s.substr(i)));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Slope parse_slope(std::string_view text) {
  std::size_t offset = 0;
  std::string_view s = trim(text, offset);
  if (s == "inf" || s == "1/0" || s == "infinity") return Slope::infinity();
  if (s.empty()) throw ParseError("empty slope", offset);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Slope(parse_signed(s, offset), 1);
  Integer p = parse_signed(s.substr(0, slash), offset);
  Integer q = parse_signed(s.substr(slash + 1), offset + slash + 1);
  if (p == 0 && q == 0) throw ParseError("0/0 is not a slope", offset);
  return Slope(p, q);
}

}  // namespace dehn
