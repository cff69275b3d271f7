#pragma once

#include "dehn/integer.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dehn {

class Manifold;

enum class SfsBase { S2, D2, Mobius };

/// Exceptional fiber of type (alpha, beta), alpha >= 2, gcd = 1.
struct Fiber {
  Integer alpha, beta;
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

namespace shape {

struct S3 {};
/// 0 <= q < p, p >= 2, q the minimum of its orbit {+-q^{+-1} mod p}.
struct Lens {
  Integer p, q;
};
/// Seifert fibered space over S^2 with full invariants; 0 < beta < alpha.
struct SfsS2 {
  Integer e;
  std::vector<Fiber> fibers;
};
/// Seifert fibered space known only by base and exceptional fiber orders.
struct SfsOrdersOnly {
  SfsBase base;
  std::vector<Integer> orders;
};
struct S1xS2 {};
struct SolidTorus {};
struct T2xI {};
struct CableSpace {
  Integer s, t;
};
/// Once-punctured torus times the circle.
struct ZxS1 {};
struct ConnSum {
  std::vector<Manifold> summands;
};
/// Formal union along tori; the gluing maps are not modeled.
struct TorusUnion {
  std::vector<Manifold> pieces;
};
struct OpaqueTag {
  std::string label;
};

}  // namespace shape

/// Label given to S^2 Seifert spaces with fewer than three exceptional fibers
/// when only the orders are known.
inline constexpr const char* kLensTypeTag = "lens-type";

/// A normalized symbolic 3-manifold. Only the factory functions below build
/// values, so every Manifold satisfies its shape's invariants.
class Manifold {
 public:
  using Shape = std::variant<shape::S3, shape::Lens, shape::SfsS2, shape::SfsOrdersOnly,
                             shape::S1xS2, shape::SolidTorus, shape::T2xI, shape::CableSpace,
                             shape::ZxS1, shape::ConnSum, shape::TorusUnion, shape::OpaqueTag>;

  const Shape& shape() const noexcept { return shape_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(shape_);
  }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&shape_);
  }

  /// Structural identity of normalized values; see manifold_compare for homeomorphism.
  friend bool operator==(const Manifold& a, const Manifold& b);
  friend bool operator<(const Manifold& a, const Manifold& b);

 private:
  explicit Manifold(Shape s) : shape_(std::move(s)) {}

  friend Manifold make_manifold(Shape);
  Shape shape_;
};

/// Total structural order used to canonicalize multisets.
int structural_compare(const Manifold& a, const Manifold& b);

Manifold s3();
Manifold s1xs2();
Manifold solid_torus();
Manifold t2xi();
Manifold zxs1();
Manifold opaque_tag(std::string label);

/// S3 for |p| = 1, S1xS2 for p = 0, otherwise the unoriented canonical lens.
/// Throws IllFormedClaim when gcd(p, q) != 1.
Manifold lens_normalize(const Integer& p, const Integer& q);

/// Drops order-1 entries and sorts. Over S2 fewer than three remaining orders
/// give the opaque "lens-type" tag; over D2 at most one gives the solid torus.
/// Throws IllFormedClaim for orders < 1.
Manifold sfs_normalize_orders(SfsBase base, std::vector<Integer> orders);
inline Manifold sfs_normalize_orders(std::vector<Integer> orders) {
  return sfs_normalize_orders(SfsBase::S2, std::move(orders));
}

/// Folds integer parts of beta/alpha into e and sorts fibers. With no
/// exceptional fibers the result is the circle bundle L(e, 1).
Manifold sfs_s2(Integer e, std::vector<Fiber> fibers);

/// C(s, t) with t >= 2, gcd(s, t) = 1; s reduced mod t.
Manifold cable_space(const Integer& s, const Integer& t);

/// Flattens nested sums, absorbs S3 and sorts. Zero summands give S3 and
/// a single summand is returned unchanged.
Manifold connected_sum(std::vector<Manifold> summands);

Manifold torus_union(std::vector<Manifold> pieces);

struct H1Result {
  bool finite = true;
  Integer order = 1;  // when finite
  int free_rank = 0;  // when infinite

  static H1Result finite_order(Integer order) { return {true, std::move(order), 0}; }
  static H1Result infinite(int rank) { return {false, 0, rank}; }
  friend bool operator==(const H1Result&, const H1Result&) = default;
};

/// Throws Indeterminate for shapes whose homology depends on unmodeled invariants.
H1Result h1(const Manifold& m);

bool is_reducible(const Manifold& m);

enum class FiniteType { cyclic, dihedral, tetrahedral, octahedral, icosahedral, not_finite, unknown };

std::string to_string(FiniteType t);
std::optional<FiniteType> finite_type_from_string(std::string_view s);

/// Finite-group type of a triangle group S^2(a, b, c); orders need not be sorted.
FiniteType classify_triangle(Integer a, Integer b, Integer c);

FiniteType classify_finite_type(const Manifold& m);

/// Throws InvalidArgument unless both are lens spaces, S3 or S1xS2.
bool lens_homeomorphic(const Manifold& a, const Manifold& b);

enum class Equality { equal, distinct, indeterminate };

std::string to_string(Equality e);

Equality manifold_compare(const Manifold& a, const Manifold& b);

/// Collapses manifold_compare; throws Indeterminate instead of guessing.
bool manifold_equal(const Manifold& a, const Manifold& b);

/// Expression syntax accepted by parse_manifold.
std::string to_string(const Manifold& m);

}  // namespace dehn
