#include "dehn/diagram.hpp"
#include "dehn/error.hpp"

#include <doctest.h>

#include <numeric>

#include <random>

using namespace dehn;

namespace {

Slope sl(long long p, long long q = 1) { return Slope(Integer(p), Integer(q)); }

Integer cf_term_sum(const Slope& r) {
  Integer s = 0;
  for (const auto& t : slope_to_cf(r).terms) s += abs(t);
  return s;
}

// |e prod a + sum b_i prod_{j != i} a_j|, written out independently of the library.
Integer montesinos_formula(const link::Montesinos& m) {
  Integer prod = 1;
  for (const auto& b : m.branches) prod *= b.q();
  Integer total = m.e * prod;
  for (const auto& b : m.branches) total += b.p() * (prod / b.q());
  return total < 0 ? Integer(-total) : total;
}

}  // namespace

TEST_CASE("map validation") {
  CHECK_THROWS_AS(CombinatorialMap({Crossing{}}, {1, 0, 3}), InvalidArgument);
  CHECK_THROWS_AS(CombinatorialMap({Crossing{}}, {0, 2, 1, 3}), InvalidArgument);
  CHECK_THROWS_AS(CombinatorialMap({Crossing{}}, {1, 2, 3, 0}), InvalidArgument);
}

TEST_CASE("standard diagram crossing counts") {
  CHECK(build_standard_diagram(two_bridge(3, 1)).crossing_count() == 3);
  CHECK(build_standard_diagram(two_bridge(5, 2)).crossing_count() == cf_term_sum(sl(5, 2)));
  LinkExpr m = montesinos_normalize(-1, {sl(1, 2), sl(1, 3), sl(1, 5)});
  CHECK(build_standard_diagram(m).crossing_count() == 11);
  CHECK_THROWS_AS(build_standard_diagram(unknot()), InvalidArgument);
  CHECK_THROWS_AS(build_standard_diagram(unlink(2)), InvalidArgument);
}

TEST_CASE("face structure") {
  FaceStructure trefoil = checkerboard_faces(build_standard_diagram(two_bridge(3, 1)));
  CHECK(trefoil.face_count == 5);
  CHECK(trefoil.white_faces.size() + trefoil.black_faces.size() == 5);
  bool split = (trefoil.white_faces.size() == 2 && trefoil.black_faces.size() == 3) ||
               (trefoil.white_faces.size() == 3 && trefoil.black_faces.size() == 2);
  CHECK(split);
  CHECK(checkerboard_faces(build_standard_diagram(two_bridge(2, 1))).face_count == 4);
  CHECK(checkerboard_faces(kinked_unknot()).face_count == 3);
}

TEST_CASE("every crossing touches two white corners and faces alternate colors") {
  for (long long p = 2; p <= 25; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CombinatorialMap m = build_standard_diagram(two_bridge(p, q));
      FaceStructure f = checkerboard_faces(m);
      REQUIRE(f.white_incidence.size() == m.crossing_count());
      for (int d = 0; d < static_cast<int>(m.dart_count()); ++d) {
        int next = CombinatorialMap::next_ccw(d);
        CHECK(f.color[static_cast<std::size_t>(f.face_of_corner[static_cast<std::size_t>(d)])] !=
              f.color[static_cast<std::size_t>(f.face_of_corner[static_cast<std::size_t>(next)])]);
      }
      CHECK(f.face_count == m.crossing_count() + 2);  // V - E + F = 2 with E = 2V
    }
}

TEST_CASE("goeritz determinant examples") {
  CHECK(goeritz_determinant(build_standard_diagram(two_bridge(3, 1))) == 3);
  CHECK(goeritz_determinant(build_standard_diagram(two_bridge(2, 1))) == 2);
  CHECK(goeritz_determinant(kinked_unknot()) == 1);
  CHECK(goeritz_determinant(build_standard_diagram(two_bridge(50, 29))) == 50);
  CHECK(goeritz_determinant(build_standard_diagram(montesinos_normalize(-1, {sl(1, 2), sl(1, 3), sl(1, 5)}))) == 1);
}

TEST_CASE("goeritz determinant of b(p,q) is p") {
  for (long long p = 2; p <= 60; ++p)
    for (long long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) REQUIRE(goeritz_determinant(build_standard_diagram(two_bridge(p, q))) == p);
}

TEST_CASE("goeritz matrices are symmetric with zero row sums, determinant independent of deleted face") {
  std::mt19937_64 rng(99);
  std::vector<LinkExpr> sample = random_montesinos_sample(40, 17);
  for (long long p = 3; p <= 40; p += 3)
    for (long long q = 1; q < p; q += 2)
      if (std::gcd(p, q) == 1) sample.push_back(two_bridge(p, q));
  sample.push_back(link_connected_sum({two_bridge(3, 1), two_bridge(5, 2)}));
  for (const auto& l : sample) {
    INFO(to_string(l));
    CombinatorialMap m = build_standard_diagram(l);
    FaceStructure f = checkerboard_faces(m);
    IntMatrix g = goeritz_matrix(m, f);
    CHECK(g.is_symmetric());
    for (const auto& s : g.row_sums()) CHECK(s == 0);
    Integer base = goeritz_determinant(m, 0);
    for (int k = 0; k < 3; ++k) {
      std::size_t drop = static_cast<std::size_t>(rng() % f.white_faces.size());
      CHECK(goeritz_determinant(m, drop) == base);
    }
  }
}

TEST_CASE("goeritz determinant matches the Montesinos formula") {
  for (const auto& l : random_montesinos_sample(100, 4242)) {
    const auto* m = l.get_if<link::Montesinos>();
    REQUIRE(m);
    INFO(to_string(l));
    CHECK(goeritz_determinant(build_standard_diagram(l)) == montesinos_formula(*m));
  }
}

TEST_CASE("random sample is deterministic and well-formed") {
  auto a = random_montesinos_sample(30, 5), b = random_montesinos_sample(30, 5);
  CHECK(a == b);
  CHECK(a != random_montesinos_sample(30, 6));
  for (const auto& l : a) {
    const auto* m = l.get_if<link::Montesinos>();
    REQUIRE(m);
    CHECK(m->branches.size() == 3);
    for (const auto& r : m->branches) CHECK(r.q() <= 9);
  }
}

TEST_CASE("connected sums splice planar diagrams") {
  LinkExpr l = link_connected_sum({two_bridge(3, 1), two_bridge(2, 1), two_bridge(5, 2)});
  CombinatorialMap m = build_standard_diagram(l);
  CHECK(m.crossing_count() == 3 + 2 + 4);
  CHECK(goeritz_determinant(m) == 30);
}

TEST_CASE("oracle cross check") {
  OracleReport r = oracle_cross_check(two_bridge(50, 29));
  CHECK(r.match);
  CHECK(r.goeritz == Integer(50));
  CHECK(r.formula == 50);
  CHECK(r.cover_h1 == Integer(50));
  OracleReport p = oracle_cross_check(montesinos_normalize(-1, {sl(1, 2), sl(1, 3), sl(1, 5)}));
  CHECK(p.match);
  CHECK(p.goeritz == Integer(1));
  CHECK(p.cover_h1 == Integer(1));
  CHECK(oracle_cross_check(two_bridge(2, 1)).goeritz == Integer(2));
  OracleReport u = oracle_cross_check(unlink(2));
  CHECK(u.match);
  CHECK_FALSE(u.goeritz);
  CHECK(u.cover_h1 == Integer(0));
  CHECK(oracle_cross_check(unknot()).goeritz == Integer(1));
}

TEST_CASE("tangle operations") {
  CHECK(TangleDiagram::twist(-4).crossing_count() == 4);
  CHECK_THROWS_AS(TangleDiagram::twist(0), InvalidArgument);
  CHECK_THROWS_AS(TangleDiagram::rational(sl(0)), InvalidArgument);
  TangleDiagram t = TangleDiagram::rational(sl(7, 3));
  CHECK(goeritz_determinant(t.numerator_closure()) == 7);
  CHECK(goeritz_determinant(t.denominator_closure()) == 3);
  CHECK(goeritz_determinant(t.rotated().numerator_closure()) == 3);
  CHECK(goeritz_determinant(t.mirrored().numerator_closure()) == 7);
  CHECK(goeritz_determinant((t + TangleDiagram::rational(sl(1, 2))).numerator_closure()) == 7 * 2 + 3);
}
