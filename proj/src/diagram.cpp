#include "dehn/diagram.hpp"

#include "dehn/branched_cover.hpp"
#include "dehn/error.hpp"
#include "dehn/manifold.hpp"

#include <numeric>
#include <queue>
#include <random>

namespace dehn {

CombinatorialMap::CombinatorialMap(std::vector<Crossing> crossings, std::vector<int> mate)
    : crossings_(std::move(crossings)), mate_(std::move(mate)) {
  if (mate_.size() != 4 * crossings_.size()) throw InvalidArgument("dart count must be four per crossing");
  const int n = static_cast<int>(mate_.size());
  for (int d = 0; d < n; ++d) {
    int m = mate_[static_cast<std::size_t>(d)];
    if (m < 0 || m >= n || m == d || mate_[static_cast<std::size_t>(m)] != d)
      throw InvalidArgument("dart " + std::to_string(d) + " is not paired exactly once");
  }
  for (const auto& c : crossings_)
    if (c.over_strand != 0 && c.over_strand != 1) throw InvalidArgument("over_strand must be 0 or 1");
}

std::size_t CombinatorialMap::component_count() const {
  std::vector<std::size_t> parent(crossings_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t d = 0; d < mate_.size(); ++d)
    parent[find(d / 4)] = find(static_cast<std::size_t>(mate_[d]) / 4);
  std::size_t count = 0;
  for (std::size_t c = 0; c < parent.size(); ++c) count += find(c) == c;
  return count;
}

// ---------------------------------------------------------------------------

TangleDiagram TangleDiagram::crossing(bool positive) {
  // Darts counterclockwise from NE: 0 = NE, 1 = NW, 2 = SW, 3 = SE.
  TangleDiagram t;
  t.crossings_.push_back({positive ? 0 : 1});
  t.mate_.assign(4, -1);
  t.ends_[NW] = 1;
  t.ends_[NE] = 0;
  t.ends_[SE] = 3;
  t.ends_[SW] = 2;
  return t;
}

TangleDiagram TangleDiagram::twist(const Integer& n) {
  if (n == 0) throw InvalidArgument("the 0 tangle has no crossings");
  if (abs(n) > 1'000'000) throw InvalidArgument("twist region too large to draw: " + n.str());
  const long long count = abs(n).convert_to<long long>();
  TangleDiagram t = crossing(n > 0);
  for (long long i = 1; i < count; ++i) t = t + crossing(n > 0);
  return t;
}

TangleDiagram TangleDiagram::rational(const Slope& fraction) {
  ContinuedFraction cf = slope_to_cf(fraction);
  if (cf.terms.empty() || (cf.terms.size() == 1 && cf.terms[0] == 0))
    throw InvalidArgument("the rational tangle " + to_string(fraction) + " has no crossings");
  TangleDiagram t = twist(cf.terms.back());
  for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
    t = t.inverted();
    if (cf.terms[i] != 0) t = t + twist(cf.terms[i]);
  }
  return t;
}

TangleDiagram TangleDiagram::operator+(const TangleDiagram& other) const {
  TangleDiagram t;
  const int offset = static_cast<int>(mate_.size());
  t.crossings_ = crossings_;
  t.crossings_.insert(t.crossings_.end(), other.crossings_.begin(), other.crossings_.end());
  t.mate_ = mate_;
  for (int m : other.mate_) t.mate_.push_back(m < 0 ? -1 : m + offset);
  auto join = [&](int a, int b) {
    t.mate_[static_cast<std::size_t>(a)] = b;
    t.mate_[static_cast<std::size_t>(b)] = a;
  };
  join(ends_[NE], other.ends_[NW] + offset);
  join(ends_[SE], other.ends_[SW] + offset);
  t.ends_[NW] = ends_[NW];
  t.ends_[SW] = ends_[SW];
  t.ends_[NE] = other.ends_[NE] + offset;
  t.ends_[SE] = other.ends_[SE] + offset;
  return t;
}

TangleDiagram TangleDiagram::rotated() const {
  TangleDiagram t = *this;
  t.ends_[NW] = ends_[NE];
  t.ends_[SW] = ends_[NW];
  t.ends_[SE] = ends_[SW];
  t.ends_[NE] = ends_[SE];
  return t;
}

TangleDiagram TangleDiagram::mirrored() const {
  TangleDiagram t = *this;
  for (auto& c : t.crossings_) c.over_strand ^= 1;
  return t;
}

CombinatorialMap TangleDiagram::numerator_closure() const {
  std::vector<int> mate = mate_;
  auto join = [&](int a, int b) {
    mate[static_cast<std::size_t>(a)] = b;
    mate[static_cast<std::size_t>(b)] = a;
  };
  join(ends_[NW], ends_[NE]);
  join(ends_[SW], ends_[SE]);
  return CombinatorialMap(crossings_, std::move(mate));
}

CombinatorialMap TangleDiagram::denominator_closure() const {
  std::vector<int> mate = mate_;
  auto join = [&](int a, int b) {
    mate[static_cast<std::size_t>(a)] = b;
    mate[static_cast<std::size_t>(b)] = a;
  };
  join(ends_[NW], ends_[SW]);
  join(ends_[NE], ends_[SE]);
  return CombinatorialMap(crossings_, std::move(mate));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> trace_faces(const CombinatorialMap& m, std::size_t& face_count) {
  std::vector<int> face(m.dart_count(), -1);
  face_count = 0;
  for (std::size_t start = 0; start < m.dart_count(); ++start) {
    if (face[start] >= 0) continue;
    int d = static_cast<int>(start);
    do {
      face[static_cast<std::size_t>(d)] = static_cast<int>(face_count);
      d = m.mate(CombinatorialMap::next_ccw(d));
    } while (d != static_cast<int>(start));
    ++face_count;
  }
  return face;
}

bool is_planar(const CombinatorialMap& m) {
  std::size_t faces = 0;
  trace_faces(m, faces);
  const long long v = static_cast<long long>(m.crossing_count());
  const long long e = static_cast<long long>(m.dart_count() / 2);
  return v - e + static_cast<long long>(faces) == 2 * static_cast<long long>(m.component_count());
}

}  // namespace

FaceStructure checkerboard_faces(const CombinatorialMap& m) {
  FaceStructure fs;
  fs.face_of_corner = trace_faces(m, fs.face_count);
  if (!is_planar(m)) throw Error("face traversal is not planar (Euler characteristic mismatch)");

  // Adjacent corners at a crossing lie in faces of opposite colors.
  std::vector<std::vector<int>> adjacent(fs.face_count);
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    int a = fs.face_of_corner[d];
    int b = fs.face_of_corner[static_cast<std::size_t>(CombinatorialMap::next_ccw(static_cast<int>(d)))];
    adjacent[static_cast<std::size_t>(a)].push_back(b);
    adjacent[static_cast<std::size_t>(b)].push_back(a);
  }
  fs.color.assign(fs.face_count, -1);
  for (std::size_t root = 0; root < fs.face_count; ++root) {
    if (fs.color[root] >= 0) continue;
    fs.color[root] = 0;
    std::queue<int> pending;
    pending.push(static_cast<int>(root));
    while (!pending.empty()) {
      int f = pending.front();
      pending.pop();
      for (int g : adjacent[static_cast<std::size_t>(f)]) {
        int want = 1 - fs.color[static_cast<std::size_t>(f)];
        if (fs.color[static_cast<std::size_t>(g)] < 0) {
          fs.color[static_cast<std::size_t>(g)] = want;
          pending.push(g);
        } else if (fs.color[static_cast<std::size_t>(g)] != want) {
          throw Error("diagram faces admit no checkerboard coloring");
        }
      }
    }
  }
  for (std::size_t f = 0; f < fs.face_count; ++f)
    (fs.color[f] == 0 ? fs.white_faces : fs.black_faces).push_back(static_cast<int>(f));

  for (std::size_t c = 0; c < m.crossing_count(); ++c) {
    const std::size_t base = 4 * c;
    int white_parity = fs.color[static_cast<std::size_t>(fs.face_of_corner[base])] == 0 ? 0 : 1;
    fs.white_incidence.push_back({fs.face_of_corner[base + static_cast<std::size_t>(white_parity)],
                                  fs.face_of_corner[base + static_cast<std::size_t>(white_parity) + 2]});
    fs.eta.push_back(white_parity == m.crossings()[c].over_strand ? 1 : -1);
  }
  return fs;
}

IntMatrix goeritz_matrix(const CombinatorialMap& m, const FaceStructure& faces) {
  std::vector<int> index(faces.face_count, -1);
  for (std::size_t i = 0; i < faces.white_faces.size(); ++i)
    index[static_cast<std::size_t>(faces.white_faces[i])] = static_cast<int>(i);
  const std::size_t n = faces.white_faces.size();
  IntMatrix g(n, n);
  for (std::size_t c = 0; c < m.crossing_count(); ++c) {
    auto i = static_cast<std::size_t>(index[static_cast<std::size_t>(faces.white_incidence[c][0])]);
    auto j = static_cast<std::size_t>(index[static_cast<std::size_t>(faces.white_incidence[c][1])]);
    if (i == j) continue;  // nugatory crossing
    const int eta = faces.eta[c];
    g(i, j) -= eta;
    g(j, i) -= eta;
    g(i, i) += eta;
    g(j, j) += eta;
  }
  return g;
}

Integer goeritz_determinant(const CombinatorialMap& m, std::size_t deleted_white_face) {
  FaceStructure faces = checkerboard_faces(m);
  IntMatrix g = goeritz_matrix(m, faces);
  if (deleted_white_face >= g.rows()) throw InvalidArgument("deleted white face out of range");
  return abs(determinant(g.minor(deleted_white_face)));
}

// ---------------------------------------------------------------------------

namespace {

CombinatorialMap splice(const CombinatorialMap& a, const CombinatorialMap& b) {
  std::vector<Crossing> crossings = a.crossings();
  crossings.insert(crossings.end(), b.crossings().begin(), b.crossings().end());
  const int offset = static_cast<int>(a.dart_count());
  for (bool flip : {false, true}) {
    std::vector<int> mate;
    for (std::size_t d = 0; d < a.dart_count(); ++d) mate.push_back(a.mate(static_cast<int>(d)));
    for (std::size_t d = 0; d < b.dart_count(); ++d) mate.push_back(b.mate(static_cast<int>(d)) + offset);
    const int a0 = 0, a1 = a.mate(0);
    const int b0 = offset, b1 = b.mate(0) + offset;
    auto join = [&](int x, int y) {
      mate[static_cast<std::size_t>(x)] = y;
      mate[static_cast<std::size_t>(y)] = x;
    };
    join(a0, flip ? b0 : b1);
    join(a1, flip ? b1 : b0);
    CombinatorialMap joined(crossings, std::move(mate));
    if (is_planar(joined)) return joined;
  }
  throw Error("no planar splice of the summand diagrams");
}

}  // namespace

CombinatorialMap build_standard_diagram(const LinkExpr& l) {
  if (auto* b = l.get_if<link::TwoBridge>()) return TangleDiagram::rational(Slope(b->p, b->q)).numerator_closure();
  if (auto* mont = l.get_if<link::Montesinos>()) {
    std::optional<TangleDiagram> t;
    auto append = [&](TangleDiagram piece) { t = t ? *t + piece : piece; };
    if (mont->e != 0) append(TangleDiagram::twist(mont->e));
    for (const auto& branch : mont->branches) append(TangleDiagram::rational(branch));
    if (!t) throw InvalidArgument("Montesinos link " + to_string(l) + " has no crossings");
    return t->numerator_closure();
  }
  if (auto* cs = l.get_if<link::ConnSum>()) {
    std::optional<CombinatorialMap> joined;
    for (const auto& s : cs->summands) {
      CombinatorialMap part = build_standard_diagram(s);
      joined = joined ? splice(*joined, part) : part;
    }
    return *joined;
  }
  throw InvalidArgument("no standard diagram for " + to_string(l));
}

CombinatorialMap kinked_unknot() { return TangleDiagram::crossing(true).numerator_closure(); }

namespace {

bool has_split_summand(const LinkExpr& l) {
  if (l.is<link::Unlink>()) return true;
  if (auto* cs = l.get_if<link::ConnSum>())
    for (const auto& s : cs->summands)
      if (has_split_summand(s)) return true;
  return false;
}

}  // namespace

OracleReport oracle_cross_check(const LinkExpr& l) {
  OracleReport r{l, std::nullopt, link_determinant(l), std::nullopt, false, ""};
  if (!has_split_summand(l)) {
    CombinatorialMap diagram = l.is<link::Unknot>() ? kinked_unknot() : build_standard_diagram(l);
    r.goeritz = goeritz_determinant(diagram);
  }
  try {
    H1Result h = h1(dbc_link(l));
    r.cover_h1 = h.finite ? h.order : Integer(0);
  } catch (const Indeterminate&) {
  }
  bool ok = true;
  if (r.goeritz && *r.goeritz != r.formula) {
    ok = false;
    r.detail += "goeritz " + r.goeritz->str() + " != formula " + r.formula.str() + "; ";
  }
  if (r.cover_h1 && *r.cover_h1 != r.formula) {
    ok = false;
    r.detail += "cover |H1| " + r.cover_h1->str() + " != formula " + r.formula.str() + "; ";
  }
  r.match = ok;
  if (ok) r.detail = r.goeritz ? "all routes agree" : "split link: no diagram, formula and cover agree";
  return r;
}

std::vector<LinkExpr> random_montesinos_sample(std::size_t count, std::uint64_t seed, int max_alpha) {
  if (max_alpha < 2) throw InvalidArgument("max_alpha must be at least 2");
  // Plain modular reduction of mt19937_64 output keeps samples portable.
  std::mt19937_64 rng(seed);
  auto pick = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<LinkExpr> out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<Slope> branches;
    for (int i = 0; i < 3; ++i) {
      long long a = pick(2, max_alpha), b;
      do b = pick(1, a - 1);
      while (std::gcd(a, b) != 1);
      branches.emplace_back(Integer(b), Integer(a));
    }
    out.push_back(montesinos_normalize(Integer(pick(-3, 3)), std::move(branches)));
  }
  return out;
}

}  // namespace dehn
