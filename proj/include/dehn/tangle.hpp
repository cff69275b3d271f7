#pragma once

#include "dehn/integer.hpp"
#include "dehn/slope.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dehn {

/// A rational tangle, identified with its Conway fraction.
struct RationalTangle {
  Slope fraction;
};

class LinkExpr;

namespace link {

struct Unknot {};
struct Unlink {
  int components;  // >= 2
};
/// 2-bridge link b(p, q): gcd(p, q) = 1, 0 < q < p, p >= 2.
struct TwoBridge {
  Integer p, q;
};
/// Montesinos link with branches beta_i/alpha_i in (0, 1), sorted.
struct Montesinos {
  Integer e;
  std::vector<Slope> branches;
};
struct ConnSum {
  std::vector<LinkExpr> summands;
};

}  // namespace link

class LinkExpr {
 public:
  using Shape = std::variant<link::Unknot, link::Unlink, link::TwoBridge, link::Montesinos, link::ConnSum>;

  const Shape& shape() const noexcept { return shape_; }
  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(shape_);
  }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&shape_);
  }

  friend bool operator==(const LinkExpr& a, const LinkExpr& b);
  friend bool operator<(const LinkExpr& a, const LinkExpr& b);

 private:
  explicit LinkExpr(Shape s) : shape_(std::move(s)) {}
  friend LinkExpr make_link(Shape);
  Shape shape_;
};

LinkExpr unknot();
/// n >= 2 (n = 1 is the unknot).
LinkExpr unlink(int components);

/// Rewrites b(0, 1) to the 2-component unlink and b(1, q) to the unknot;
/// otherwise reduces q into (0, p). Throws InvalidArgument unless gcd(p, q) = 1.
LinkExpr two_bridge(const Integer& p, const Integer& q);

/// Folds integer parts into e, sorts branches by (denominator, numerator).
/// Throws InvalidArgument for an integer or infinite branch.
LinkExpr montesinos_normalize(Integer e, std::vector<Slope> branches);

/// Flattens, drops unknot summands, sorts.
LinkExpr link_connected_sum(std::vector<LinkExpr> summands);

/// N(p/q) = b(|p|, q); N(0) = unknot; N(inf) = 2-component unlink.
LinkExpr numerator_closure(const RationalTangle& t);

/// |H1| of the double branched cover; 0 for split links.
Integer link_determinant(const LinkExpr& l);

/// "unknot", "unlink(n)", "b(p/q)", "mont(e; r1, ..., rk)", joined by "+".
std::string to_string(const LinkExpr& l);

LinkExpr parse_link(std::string_view text);

}  // namespace dehn
