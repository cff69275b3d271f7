#include "dehn/error.hpp"
#include "dehn/slope.hpp"

#include <doctest.h>

#include <random>

using namespace dehn;

namespace {

Slope sl(long long p, long long q = 1) { return Slope(Integer(p), Integer(q)); }

// Random unimodular matrix as a product of elementary moves.
IntMatrix2 random_unimodular(std::mt19937_64& rng) {
  IntMatrix2 m{{{1, 0}, {0, 1}}};
  for (int k = 0; k < 6; ++k) {
    long long c = static_cast<long long>(rng() % 7) - 3;
    IntMatrix2 e = rng() % 2 ? IntMatrix2{{{1, c}, {0, 1}}} : IntMatrix2{{{1, 0}, {c, 1}}};
    IntMatrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r[i][j] = m[i][0] * e[0][j] + m[i][1] * e[1][j];
    m = r;
  }
  if (rng() % 2) std::swap(m[0], m[1]);  // det -1
  return m;
}

}  // namespace

TEST_CASE("slopes are reduced with positive denominator") {
  CHECK(sl(0, 1) == Slope(0, 1));
  CHECK(sl(2, -4) == sl(-1, 2));
  CHECK(sl(2, -4).p() == -1);
  CHECK(sl(2, -4).q() == 2);
  CHECK(sl(3, 0) == Slope::infinity());
  CHECK(sl(-5, 0) == Slope::infinity());
  CHECK_THROWS_AS(Slope(0, 0), InvalidArgument);
}

TEST_CASE("distance examples") {
  CHECK(slope_distance(sl(2), sl(1, 3)) == 5);
  CHECK(slope_distance(sl(0), sl(4)) == 4);
  CHECK(slope_distance(sl(0), sl(-1, 2)) == 1);
  CHECK(slope_distance(sl(-1), sl(-1, 2)) == 1);
  CHECK(slope_distance(sl(0), Slope::infinity()) == 1);
  CHECK(slope_distance(sl(-1, 2), Slope::infinity()) == 2);
  CHECK(slope_distance(sl(7, 3), sl(7, 3)) == 0);
}

TEST_CASE("distance from 2 to 1/q is |2q-1|") {
  for (long long q = -200; q <= 200; ++q) {
    if (q == 0) continue;
    CHECK(slope_distance(sl(2), sl(1, q)) == abs(Integer(2 * q - 1)));
  }
}

TEST_CASE("distance is symmetric and vanishes only on the diagonal") {
  std::vector<Slope> all;
  for (long long p = -12; p <= 12; ++p)
    for (long long q = 0; q <= 12; ++q)
      if (gcd(Integer(p), Integer(q)) == 1) all.push_back(sl(p, q));
  for (const auto& a : all)
    for (const auto& b : all) {
      Integer d = slope_distance(a, b);
      CHECK(d == slope_distance(b, a));
      CHECK((d == 0) == (a == b));
    }
}

TEST_CASE("distance is invariant under unimodular maps") {
  std::mt19937_64 rng(20240601);
  std::vector<Slope> all;
  for (long long p = -12; p <= 12; ++p)
    for (long long q = 0; q <= 12; ++q)
      if (gcd(Integer(p), Integer(q)) == 1) all.push_back(sl(p, q));
  for (int t = 0; t < 50; ++t) {
    IntMatrix2 m = random_unimodular(rng);
    for (std::size_t i = 0; i < all.size(); i += 3)
      for (std::size_t j = 0; j < all.size(); j += 5) {
        Slope a = slope_apply_unimodular(m, all[i]), b = slope_apply_unimodular(m, all[j]);
        REQUIRE(slope_distance(a, b) == slope_distance(all[i], all[j]));
      }
  }
}

TEST_CASE("unimodular action examples") {
  IntMatrix2 id{{{1, 0}, {0, 1}}}, swap{{{0, 1}, {1, 0}}}, shear{{{1, 1}, {0, 1}}};
  CHECK(slope_apply_unimodular(id, sl(5, 3)) == sl(5, 3));
  CHECK(slope_apply_unimodular(swap, sl(5, 3)) == sl(3, 5));
  CHECK(slope_apply_unimodular(shear, sl(0)) == sl(1));
  CHECK_THROWS_AS(slope_apply_unimodular(IntMatrix2{{{2, 0}, {0, 1}}}, sl(1)), InvalidArgument);
}

TEST_CASE("continued fractions") {
  using CF = ContinuedFraction;
  CHECK(slope_to_cf(sl(7, 3)) == CF{{2, 3}});
  CHECK(slope_to_cf(sl(3)) == CF{{3}});
  CHECK(slope_to_cf(Slope::infinity()) == CF{});
  CHECK(cf_to_slope(CF{{2, 3}}) == sl(7, 3));
  CHECK(cf_to_slope(CF{}) == Slope::infinity());
  CHECK(cf_to_slope(CF{{0, 2}}) == sl(1, 2));
  CHECK(slope_to_cf(sl(-7, 3)) == CF{{-3, 1, 2}});
}

TEST_CASE("continued fraction round trip") {
  for (long long p = -50; p <= 50; ++p)
    for (long long q = 0; q <= 50; ++q) {
      if (gcd(Integer(p), Integer(q)) != 1) continue;
      Slope r = sl(p, q);
      ContinuedFraction cf = slope_to_cf(r);
      for (std::size_t i = 1; i < cf.terms.size(); ++i) REQUIRE(cf.terms[i] > 0);
      if (cf.terms.size() > 1) REQUIRE(cf.terms.back() >= 2);
      REQUIRE(cf_to_slope(cf) == r);
    }
}

TEST_CASE("slope text") {
  CHECK(parse_slope("inf") == Slope::infinity());
  CHECK(parse_slope("1/0") == Slope::infinity());
  CHECK(parse_slope("-1/2") == sl(-1, 2));
  CHECK(parse_slope("4") == sl(4));
  CHECK(parse_slope("6/-4") == sl(-3, 2));
  CHECK(to_string(sl(-1, 2)) == "-1/2");
  CHECK(to_string(sl(4)) == "4");
  CHECK(to_string(Slope::infinity()) == "inf");
  CHECK_THROWS_AS(parse_slope("0/0"), ParseError);
  CHECK_THROWS_AS(parse_slope("1/"), ParseError);
  CHECK_THROWS_AS(parse_slope("x"), ParseError);
  try {
    parse_slope("12/a");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("large integers do not overflow") {
  Integer big("123456789012345678901234567890");
  Slope r(big, big + 1);
  CHECK(slope_distance(r, sl(1)) == 1);
  CHECK(cf_to_slope(slope_to_cf(r)) == r);
}
