#include "dehn/error.hpp"
#include "dehn/manifold.hpp"
#include "dehn/parse.hpp"

#include <doctest.h>

#include <numeric>

#include <random>
#include <set>

using namespace dehn;

namespace {

// Brute-force canonical q: smallest q' in [0, p) with q' = +-q^(+-1) mod p.
long long canonical_q(long long p, long long q) {
  auto m = [p](long long x) { return ((x % p) + p) % p; };
  for (long long c = 0; c < p; ++c) {
    if (m(c - q) == 0 || m(c + q) == 0 || m(c * q - 1) == 0 || m(c * q + 1) == 0) return c;
  }
  return -1;
}

Manifold lens(long long p, long long q) { return lens_normalize(Integer(p), Integer(q)); }

}  // namespace

TEST_CASE("lens normalization examples") {
  CHECK(lens(1, 7) == s3());
  CHECK(lens(-1, 3) == s3());
  CHECK(lens(0, 1) == s1xs2());
  CHECK(to_string(lens(-50, 29)) == "L(50,19)");
  CHECK(to_string(lens(6, 5)) == "L(6,1)");
  CHECK_THROWS_AS(lens(4, 2), IllFormedClaim);
  CHECK_THROWS_AS(lens(0, 2), IllFormedClaim);
}

TEST_CASE("lens normalization agrees with brute-force orbit minimum") {
  for (long long p = 2; p <= 60; ++p)
    for (long long q = -2 * p; q <= 2 * p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      long long want = canonical_q(p, q);
      Manifold m = lens(p, q);
      const auto* l = m.get_if<shape::Lens>();
      REQUIRE(l);
      REQUIRE(l->p == p);
      REQUIRE(l->q == want);
      CHECK(lens(-p, q) == lens(p, q));
    }
}

TEST_CASE("lens normalization is idempotent and homeomorphism is an equivalence (p <= 30)") {
  for (long long p = 2; p <= 30; ++p) {
    std::vector<Manifold> all;
    for (long long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) all.push_back(lens(p, q));
    for (const auto& a : all) {
      const auto* l = a.get_if<shape::Lens>();
      REQUIRE(lens_normalize(l->p, l->q) == a);
      CHECK(lens_homeomorphic(a, a));
      for (const auto& b : all) {
        CHECK(lens_homeomorphic(a, b) == lens_homeomorphic(b, a));
        for (const auto& c : all)
          if (lens_homeomorphic(a, b) && lens_homeomorphic(b, c)) CHECK(lens_homeomorphic(a, c));
      }
    }
  }
}

TEST_CASE("lens homeomorphism examples") {
  CHECK(lens_homeomorphic(lens(6, 5), lens(6, 1)));
  CHECK_FALSE(lens_homeomorphic(lens(7, 1), lens(7, 2)));
  CHECK(lens_homeomorphic(lens(5, 2), lens(5, 3)));
  CHECK_FALSE(lens_homeomorphic(lens(5, 2), s1xs2()));
  CHECK_THROWS_AS(lens_homeomorphic(lens(5, 2), t2xi()), InvalidArgument);
}

TEST_CASE("orders-only Seifert normalization") {
  CHECK(to_string(sfs_normalize_orders({13, 2, 2})) == "S2(2,2,13)");
  CHECK(sfs_normalize_orders({1, 3, 5}) == opaque_tag(kLensTypeTag));
  CHECK_THROWS_AS(sfs_normalize_orders({2, 3, 0}), IllFormedClaim);
  CHECK_THROWS_AS(sfs_normalize_orders({2, -3, 5}), IllFormedClaim);
  CHECK(sfs_normalize_orders(SfsBase::D2, {5}) == solid_torus());
  CHECK(sfs_normalize_orders(SfsBase::D2, {1, 1}) == solid_torus());
  CHECK(to_string(sfs_normalize_orders(SfsBase::D2, {3, 2})) == "D2(2,3)");
  CHECK(to_string(sfs_normalize_orders(SfsBase::Mobius, {3})) == "M2(3)");
}

TEST_CASE("exact Seifert spaces fold integer parts") {
  Manifold p = sfs_s2(-1, {{2, 1}, {3, 1}, {5, 1}});
  CHECK(sfs_s2(0, {{2, -1}, {3, 1}, {5, 1}}) == p);
  CHECK(sfs_s2(-2, {{2, 3}, {3, 1}, {5, 1}}) == p);
  CHECK(h1(p) == H1Result::finite_order(1));
  CHECK(classify_finite_type(p) == FiniteType::icosahedral);
  // Two fibers or fewer is a lens space or S1xS2.
  CHECK(sfs_s2(3, {}) == lens(3, 1));
  CHECK(classify_finite_type(sfs_s2(0, {{2, 1}, {3, 1}})) == FiniteType::cyclic);
  CHECK(classify_finite_type(sfs_s2(0, {{2, 1}, {2, -1}})) == FiniteType::not_finite);
}

TEST_CASE("connected sums are flattened multisets") {
  Manifold a = connected_sum({lens(4, 1), connected_sum({s3(), lens(3, 1)})});
  Manifold b = connected_sum({lens(3, 1), lens(4, 1)});
  CHECK(a == b);
  CHECK(to_string(a) == "L(3,1)#L(4,1)");
  CHECK(connected_sum({s3(), lens(5, 2)}) == lens(5, 2));
  CHECK(connected_sum({}) == s3());
  CHECK_THROWS_AS(torus_union({cable_space(1, 2)}), InvalidArgument);
}

TEST_CASE("homology") {
  CHECK(h1(lens(50, 19)) == H1Result::finite_order(50));
  CHECK(h1(connected_sum({lens(3, 1), lens(4, 1)})) == H1Result::finite_order(12));
  CHECK(h1(s1xs2()) == H1Result::infinite(1));
  CHECK(h1(s3()) == H1Result::finite_order(1));
  CHECK(h1(connected_sum({s1xs2(), s1xs2(), lens(2, 1)})).free_rank == 2);
  CHECK_THROWS_AS(h1(sfs_normalize_orders({2, 3, 5})), Indeterminate);
  CHECK_THROWS_AS(h1(opaque_tag("toroidal")), Indeterminate);
}

TEST_CASE("homology is multiplicative under connected sum (random lens pairs)") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long long p1 = 2 + static_cast<long long>(rng() % 60), p2 = 2 + static_cast<long long>(rng() % 60);
    long long q1, q2;
    do q1 = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(p1));
    while (std::gcd(p1, q1) != 1);
    do q2 = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(p2));
    while (std::gcd(p2, q2) != 1);
    Manifold s = connected_sum({lens(p1, q1), lens(p2, q2)});
    CHECK(h1(s) == H1Result::finite_order(Integer(p1 * p2)));
  }
}

TEST_CASE("reducibility") {
  CHECK(is_reducible(connected_sum({lens(2, 1), lens(3, 1)})));
  CHECK(is_reducible(s1xs2()));
  CHECK_FALSE(is_reducible(lens(50, 19)));
  CHECK_FALSE(is_reducible(sfs_normalize_orders({2, 3, 5})));
}

TEST_CASE("finite type examples") {
  CHECK(classify_finite_type(sfs_normalize_orders({2, 2, 13})) == FiniteType::dihedral);
  CHECK(classify_finite_type(sfs_normalize_orders({2, 3, 3})) == FiniteType::tetrahedral);
  CHECK(classify_finite_type(sfs_normalize_orders({2, 3, 4})) == FiniteType::octahedral);
  CHECK(classify_finite_type(sfs_normalize_orders({5, 3, 2})) == FiniteType::icosahedral);
  CHECK(classify_finite_type(sfs_normalize_orders({2, 3, 7})) == FiniteType::not_finite);
  CHECK(classify_finite_type(sfs_normalize_orders({2, 3, 6})) == FiniteType::not_finite);
  CHECK(classify_finite_type(connected_sum({lens(3, 1), lens(3, 1)})) == FiniteType::not_finite);
  CHECK(classify_finite_type(lens(7, 2)) == FiniteType::cyclic);
  CHECK(classify_finite_type(s3()) == FiniteType::cyclic);
  CHECK(classify_finite_type(s1xs2()) == FiniteType::not_finite);
  CHECK(classify_finite_type(zxs1()) == FiniteType::not_finite);
  CHECK(classify_finite_type(opaque_tag("toroidal")) == FiniteType::not_finite);
  CHECK(classify_finite_type(sfs_normalize_orders({1, 3, 5})) == FiniteType::unknown);
}

TEST_CASE("triangle classifier against the 1/a+1/b+1/c > 1 criterion") {
  for (int a = 2; a <= 40; ++a)
    for (int b = a; b <= 40; ++b)
      for (int c = b; c <= 40; ++c) {
        bool spherical = b * c + a * c + a * b > a * b * c;
        FiniteType t = classify_triangle(c, a, b);
        REQUIRE((t != FiniteType::not_finite) == spherical);
      }
}

TEST_CASE("cyclic implies irreducible") {
  std::vector<Manifold> sample = {s3(), lens(5, 2), lens(50, 19), s1xs2(),
                                  connected_sum({lens(2, 1), lens(3, 1)}), sfs_s2(0, {{2, 1}, {3, 1}})};
  for (const auto& m : sample)
    if (classify_finite_type(m) == FiniteType::cyclic) CHECK_FALSE(is_reducible(m));
}

TEST_CASE("three-valued equality") {
  CHECK(manifold_compare(lens(6, 5), lens(6, 1)) == Equality::equal);
  CHECK(manifold_equal(lens(6, 5), lens(6, 1)));
  CHECK(manifold_compare(lens(50, 19), sfs_normalize_orders({2, 2, 13})) == Equality::distinct);
  CHECK(manifold_compare(sfs_normalize_orders({2, 3, 3}), sfs_normalize_orders({2, 3, 3})) ==
        Equality::indeterminate);
  CHECK_THROWS_AS(manifold_equal(sfs_normalize_orders({2, 3, 3}), sfs_normalize_orders({2, 3, 3})), Indeterminate);
  CHECK(manifold_compare(sfs_normalize_orders({2, 3, 3}), sfs_normalize_orders({2, 3, 4})) == Equality::distinct);
  Manifold p = sfs_s2(-1, {{2, 1}, {3, 1}, {5, 1}});
  CHECK(manifold_compare(p, sfs_normalize_orders({2, 3, 5})) == Equality::indeterminate);
  CHECK(manifold_compare(p, sfs_s2(1, {{2, -1}, {3, -1}, {5, -1}})) == Equality::equal);  // mirror
  CHECK(manifold_compare(connected_sum({lens(3, 1), lens(4, 1)}), connected_sum({lens(4, 3), lens(3, 2)})) ==
        Equality::equal);
  CHECK(manifold_compare(connected_sum({lens(3, 1), lens(4, 1)}), connected_sum({lens(3, 1), lens(5, 1)})) ==
        Equality::distinct);
  CHECK(manifold_compare(connected_sum({lens(2, 1), sfs_normalize_orders({2, 3, 5})}),
                         connected_sum({lens(2, 1), sfs_normalize_orders({2, 3, 5})})) == Equality::indeterminate);
  CHECK(manifold_compare(cable_space(1, 3), cable_space(2, 3)) == Equality::equal);
}

TEST_CASE("finite type names") {
  for (FiniteType t : {FiniteType::cyclic, FiniteType::dihedral, FiniteType::tetrahedral, FiniteType::octahedral,
                       FiniteType::icosahedral, FiniteType::not_finite, FiniteType::unknown})
    CHECK(finite_type_from_string(to_string(t)) == t);
  CHECK_FALSE(finite_type_from_string("spherical"));
}
