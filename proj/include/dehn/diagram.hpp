#pragma once

#include "dehn/int_matrix.hpp"
#include "dehn/integer.hpp"
#include "dehn/slope.hpp"
#include "dehn/tangle.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dehn {

/// One crossing of a link diagram. Its four half-edges (darts) are numbered
/// 4c + k, k = 0..3, in counterclockwise order; darts k and k+2 lie on the
/// same strand. over_strand = 0 means the strand through darts 0 and 2
/// passes over.
struct Crossing {
  int over_strand = 0;
};

/// A link diagram as a rotation system: the embedding is carried entirely
/// by the counterclockwise dart order at each crossing and the edge
/// pairing, so faces come from traversal with no coordinates involved.
class CombinatorialMap {
 public:
  /// Throws InvalidArgument unless mate is a fixed-point-free involution
  /// on all 4 * crossings.size() darts.
  CombinatorialMap(std::vector<Crossing> crossings, std::vector<int> mate);

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t dart_count() const noexcept { return mate_.size(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  int mate(int dart) const { return mate_.at(static_cast<std::size_t>(dart)); }
  static int next_ccw(int dart) noexcept { return (dart & ~3) | ((dart + 1) & 3); }
  static int crossing_of(int dart) noexcept { return dart >> 2; }

  /// Number of connected components of the underlying 4-valent graph.
  std::size_t component_count() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> mate_;
};

/// A 4-ended tangle diagram under construction. Ends are indexed NW, NE,
/// SE, SW (clockwise around the tangle disk). Every tangle here contains at
/// least one crossing, so each end is a real dart.
class TangleDiagram {
 public:
  enum End { NW = 0, NE = 1, SE = 2, SW = 3 };

  /// One crossing; the positive one has its NE-SW strand on top.
  static TangleDiagram crossing(bool positive);

  /// |n| horizontal half-twists, fraction n. Throws InvalidArgument for n = 0.
  static TangleDiagram twist(const Integer& n);

  /// Standard diagram of the rational tangle with the given fraction, built
  /// from its continued fraction [a1, ..., an] as ((([an]^-1 + a(n-1))^-1 + ...)^-1 + a1).
  /// Throws InvalidArgument for 0 and inf, which have no crossings.
  static TangleDiagram rational(const Slope& fraction);

  /// Horizontal sum: this tangle's east ends joined to the west ends of other.
  TangleDiagram operator+(const TangleDiagram& other) const;

  /// Quarter turn counterclockwise (fraction F -> -1/F).
  TangleDiagram rotated() const;
  /// Every crossing switched (fraction F -> -F).
  TangleDiagram mirrored() const;
  /// Fraction F -> 1/F.
  TangleDiagram inverted() const { return rotated().mirrored(); }

  /// Joins NW-NE and SW-SE.
  CombinatorialMap numerator_closure() const;
  /// Joins NW-SW and NE-SE.
  CombinatorialMap denominator_closure() const;

  std::size_t crossing_count() const noexcept { return crossings_.size(); }

 private:
  TangleDiagram() = default;

  std::vector<Crossing> crossings_;
  std::vector<int> mate_;  // -1 for the four free ends
  std::array<int, 4> ends_{};
};

/// Faces of a map with a proper two-coloring.
///
/// Corner d (same index as dart d) is the sector from dart d to the next dart
/// counterclockwise; faces are the orbits of d -> mate(next_ccw(d)).
struct FaceStructure {
  std::vector<int> face_of_corner;
  std::size_t face_count = 0;
  std::vector<int> color;  // per face: 0 white, 1 black
  std::vector<int> white_faces, black_faces;
  /// Per crossing: the faces holding its two white corners (may coincide).
  std::vector<std::array<int, 2>> white_incidence;
  /// Per crossing: Goeritz sign, +1 when the white corners are the ones
  /// swept by turning the over-strand counterclockwise.
  std::vector<int> eta;
};

/// Throws Error when the traversal is not planar (V - E + F != 2 per
/// component) or the faces admit no checkerboard coloring.
FaceStructure checkerboard_faces(const CombinatorialMap& m);

/// Goeritz matrix over all white faces (before deleting a row/column):
/// G_ij = -sum eta(c) over crossings joining white faces i != j, diagonal
/// chosen so rows sum to zero. Indexed by position in white_faces.
IntMatrix goeritz_matrix(const CombinatorialMap& m, const FaceStructure& faces);

/// |det| of the Goeritz matrix with the given white face deleted.
Integer goeritz_determinant(const CombinatorialMap& m, std::size_t deleted_white_face = 0);

/// Standard diagram: b(p, q) as the numerator closure of the rational
/// tangle p/q; mont(e; r_i) as N([e] + R(r_1) + ... + R(r_k)); a connected
/// sum by splicing summand diagrams along an edge.
/// Throws InvalidArgument for the unknot, unlinks and split sums.
CombinatorialMap build_standard_diagram(const LinkExpr& l);

/// Single-crossing Reidemeister I picture of the unknot.
CombinatorialMap kinked_unknot();

struct OracleReport {
  LinkExpr link;
  std::optional<Integer> goeritz;   // absent when the link has no standard diagram
  Integer formula;                  // link_determinant
  std::optional<Integer> cover_h1;  // |H1(dbc)|, 0 if infinite; absent if not exact
  bool match = false;
  std::string detail;
};

/// Compares the Goeritz determinant of the standard diagram with the
/// fraction formula and with |H1| of the double branched cover.
OracleReport oracle_cross_check(const LinkExpr& l);

/// Seeded Montesinos links with three branches b/a, 2 <= a <= max_alpha,
/// 0 < b < a coprime, and e in [-3, 3]. Same seed, same sample on every platform.
std::vector<LinkExpr> random_montesinos_sample(std::size_t count, std::uint64_t seed, int max_alpha = 9);

}  // namespace dehn
