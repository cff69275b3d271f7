#include "dehn/manifold.hpp"

#include "dehn/error.hpp"

#include <algorithm>
#include <functional>

namespace dehn {

Manifold make_manifold(Manifold::Shape s) { return Manifold(std::move(s)); }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int cmp(const Integer& a, const Integer& b) { return a < b ? -1 : (b < a ? 1 : 0); }

template <class T, class F>
int cmp_lists(const std::vector<T>& a, const std::vector<T>& b, F&& element_cmp) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (int c = element_cmp(a[i], b[i])) return c;
  return cmp(Integer(a.size()), Integer(b.size()));
}

int cmp_fiber(const Fiber& a, const Fiber& b) {
  if (int c = cmp(a.alpha, b.alpha)) return c;
  return cmp(a.beta, b.beta);
}

}  // namespace

int structural_compare(const Manifold& a, const Manifold& b) {
  const auto& sa = a.shape();
  const auto& sb = b.shape();
  if (sa.index() != sb.index()) return sa.index() < sb.index() ? -1 : 1;
  return std::visit(
      overloaded{
          [&](const shape::Lens& x) {
            const auto& y = std::get<shape::Lens>(sb);
            if (int c = cmp(x.p, y.p)) return c;
            return cmp(x.q, y.q);
          },
          [&](const shape::SfsS2& x) {
            const auto& y = std::get<shape::SfsS2>(sb);
            if (int c = cmp(x.e, y.e)) return c;
            return cmp_lists(x.fibers, y.fibers, cmp_fiber);
          },
          [&](const shape::SfsOrdersOnly& x) {
            const auto& y = std::get<shape::SfsOrdersOnly>(sb);
            if (x.base != y.base) return x.base < y.base ? -1 : 1;
            return cmp_lists(x.orders, y.orders, cmp);
          },
          [&](const shape::CableSpace& x) {
            const auto& y = std::get<shape::CableSpace>(sb);
            if (int c = cmp(x.t, y.t)) return c;
            return cmp(x.s, y.s);
          },
          [&](const shape::ConnSum& x) {
            return cmp_lists(x.summands, std::get<shape::ConnSum>(sb).summands, structural_compare);
          },
          [&](const shape::TorusUnion& x) {
            return cmp_lists(x.pieces, std::get<shape::TorusUnion>(sb).pieces, structural_compare);
          },
          [&](const shape::OpaqueTag& x) {
            const auto& y = std::get<shape::OpaqueTag>(sb);
            return x.label < y.label ? -1 : (y.label < x.label ? 1 : 0);
          },
          [](const auto&) { return 0; },
      },
      sa);
}

bool operator==(const Manifold& a, const Manifold& b) { return structural_compare(a, b) == 0; }
bool operator<(const Manifold& a, const Manifold& b) { return structural_compare(a, b) < 0; }

Manifold s3() { return make_manifold(shape::S3{}); }
Manifold s1xs2() { return make_manifold(shape::S1xS2{}); }
Manifold solid_torus() { return make_manifold(shape::SolidTorus{}); }
Manifold t2xi() { return make_manifold(shape::T2xI{}); }
Manifold zxs1() { return make_manifold(shape::ZxS1{}); }
Manifold opaque_tag(std::string label) { return make_manifold(shape::OpaqueTag{std::move(label)}); }

Manifold lens_normalize(const Integer& p, const Integer& q) {
  if (abs(p) == 1) return s3();
  if (gcd(p, q) != 1)
    throw IllFormedClaim("L(" + p.str() + "," + q.str() + ") has non-coprime parameters");
  if (p == 0) return s1xs2();
  Integer n = abs(p);
  Integer r = mod(q, n);
  Integer inv = mod_inverse(r, n);
  Integer best = std::min({r, Integer(n - r), inv, Integer(n - inv)});
  return make_manifold(shape::Lens{n, best});
}

Manifold sfs_normalize_orders(SfsBase base, std::vector<Integer> orders) {
  for (const auto& o : orders)
    if (o < 1) throw IllFormedClaim("exceptional fiber order " + o.str() + " is degenerate");
  std::erase_if(orders, [](const Integer& o) { return o == 1; });
  std::sort(orders.begin(), orders.end());
  if (base == SfsBase::S2 && orders.size() < 3) return opaque_tag(kLensTypeTag);
  if (base == SfsBase::D2 && orders.size() < 2) return solid_torus();
  return make_manifold(shape::SfsOrdersOnly{base, std::move(orders)});
}

Manifold sfs_s2(Integer e, std::vector<Fiber> fibers) {
  std::vector<Fiber> kept;
  for (auto& f : fibers) {
    if (f.alpha < 1) throw IllFormedClaim("fiber multiplicity " + f.alpha.str() + " < 1");
    if (gcd(f.alpha, f.beta) != 1)
      throw IllFormedClaim("fiber (" + f.alpha.str() + "," + f.beta.str() + ") is not coprime");
    e += floor_div(f.beta, f.alpha);
    Integer beta = mod(f.beta, f.alpha);
    if (f.alpha >= 2) kept.push_back({f.alpha, beta});
  }
  if (kept.empty()) return lens_normalize(e, 1);
  std::sort(kept.begin(), kept.end(), [](const Fiber& a, const Fiber& b) { return cmp_fiber(a, b) < 0; });
  return make_manifold(shape::SfsS2{std::move(e), std::move(kept)});
}

Manifold cable_space(const Integer& s, const Integer& t) {
  if (t < 2) throw IllFormedClaim("cable space C(s,t) needs t >= 2, got t = " + t.str());
  if (gcd(s, t) != 1) throw IllFormedClaim("cable space C(" + s.str() + "," + t.str() + ") is not coprime");
  return make_manifold(shape::CableSpace{mod(s, t), t});
}

Manifold connected_sum(std::vector<Manifold> summands) {
  std::vector<Manifold> flat;
  for (auto& m : summands) {
    if (auto* cs = m.get_if<shape::ConnSum>()) {
      flat.insert(flat.end(), cs->summands.begin(), cs->summands.end());
    } else if (!m.is<shape::S3>()) {
      flat.push_back(std::move(m));
    }
  }
  if (flat.empty()) return s3();
  if (flat.size() == 1) return std::move(flat.front());
  std::sort(flat.begin(), flat.end());
  return make_manifold(shape::ConnSum{std::move(flat)});
}

Manifold torus_union(std::vector<Manifold> pieces) {
  if (pieces.size() < 2) throw InvalidArgument("a torus union needs at least two pieces");
  return make_manifold(shape::TorusUnion{std::move(pieces)});
}

// ---------------------------------------------------------------------------

namespace {

Integer product(const std::vector<Fiber>& fibers) {
  Integer p = 1;
  for (const auto& f : fibers) p *= f.alpha;
  return p;
}

// |e prod(alpha) + sum beta_i prod_{j != i} alpha_j|
Integer sfs_homology_order(const shape::SfsS2& m) {
  Integer total = m.e * product(m.fibers);
  for (std::size_t i = 0; i < m.fibers.size(); ++i) {
    Integer term = m.fibers[i].beta;
    for (std::size_t j = 0; j < m.fibers.size(); ++j)
      if (j != i) term *= m.fibers[j].alpha;
    total += term;
  }
  return abs(total);
}

}  // namespace

H1Result h1(const Manifold& m) {
  return std::visit(
      overloaded{
          [](const shape::S3&) { return H1Result::finite_order(1); },
          [](const shape::Lens& l) { return H1Result::finite_order(l.p); },
          [](const shape::SfsS2& s) {
            Integer order = sfs_homology_order(s);
            return order == 0 ? H1Result::infinite(1) : H1Result::finite_order(order);
          },
          [](const shape::SfsOrdersOnly&) -> H1Result {
            throw Indeterminate("H1 of an orders-only Seifert space depends on unknown beta invariants");
          },
          [](const shape::S1xS2&) { return H1Result::infinite(1); },
          [](const shape::SolidTorus&) { return H1Result::infinite(1); },
          [](const shape::T2xI&) { return H1Result::infinite(2); },
          [](const shape::CableSpace&) { return H1Result::infinite(2); },
          [](const shape::ZxS1&) { return H1Result::infinite(3); },
          [](const shape::ConnSum& cs) {
            Integer order = 1;
            int rank = 0;
            for (const auto& s : cs.summands) {
              H1Result part = h1(s);
              if (part.finite) order *= part.order;
              else rank += part.free_rank;
            }
            return rank > 0 ? H1Result::infinite(rank) : H1Result::finite_order(order);
          },
          [](const shape::TorusUnion&) -> H1Result {
            throw Indeterminate("H1 of a torus union depends on the unmodeled gluing");
          },
          [](const shape::OpaqueTag& t) -> H1Result {
            throw Indeterminate("H1 of <" + t.label + "> is not modeled");
          },
      },
      m.shape());
}

bool is_reducible(const Manifold& m) { return m.is<shape::ConnSum>() || m.is<shape::S1xS2>(); }

std::string to_string(FiniteType t) {
  switch (t) {
    case FiniteType::cyclic: return "cyclic";
    case FiniteType::dihedral: return "dihedral";
    case FiniteType::tetrahedral: return "tetrahedral";
    case FiniteType::octahedral: return "octahedral";
    case FiniteType::icosahedral: return "icosahedral";
    case FiniteType::not_finite: return "not_finite";
    case FiniteType::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<FiniteType> finite_type_from_string(std::string_view s) {
  for (auto t : {FiniteType::cyclic, FiniteType::dihedral, FiniteType::tetrahedral,
                 FiniteType::octahedral, FiniteType::icosahedral, FiniteType::not_finite,
                 FiniteType::unknown})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

FiniteType classify_triangle(Integer a, Integer b, Integer c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  // 1/a + 1/b + 1/c > 1  <=>  bc + ac + ab > abc
  if (b * c + a * c + a * b <= a * b * c) return FiniteType::not_finite;
  if (a == 2 && b == 2) return FiniteType::dihedral;
  if (a == 2 && b == 3 && c == 3) return FiniteType::tetrahedral;
  if (a == 2 && b == 3 && c == 4) return FiniteType::octahedral;
  if (a == 2 && b == 3 && c == 5) return FiniteType::icosahedral;
  // Unreachable for a, b, c >= 2: the spherical triples are exactly the above.
  return FiniteType::unknown;
}

FiniteType classify_finite_type(const Manifold& m) {
  return std::visit(
      overloaded{
          [](const shape::S3&) { return FiniteType::cyclic; },
          [](const shape::Lens&) { return FiniteType::cyclic; },
          [&](const shape::SfsS2& s) {
            if (s.fibers.size() <= 2) return h1(m).finite ? FiniteType::cyclic : FiniteType::not_finite;
            if (s.fibers.size() > 3) return FiniteType::not_finite;
            return classify_triangle(s.fibers[0].alpha, s.fibers[1].alpha, s.fibers[2].alpha);
          },
          [](const shape::SfsOrdersOnly& s) {
            if (s.base != SfsBase::S2 || s.orders.size() != 3) return FiniteType::not_finite;
            return classify_triangle(s.orders[0], s.orders[1], s.orders[2]);
          },
          [](const shape::OpaqueTag& t) {
            return t.label == kLensTypeTag ? FiniteType::unknown : FiniteType::not_finite;
          },
          [](const auto&) { return FiniteType::not_finite; },
      },
      m.shape());
}

// ---------------------------------------------------------------------------

namespace {

struct LensData {
  Integer p, q;
};

std::optional<LensData> as_lens(const Manifold& m) {
  if (m.is<shape::S3>()) return LensData{1, 0};
  if (m.is<shape::S1xS2>()) return LensData{0, 1};
  if (auto* l = m.get_if<shape::Lens>()) return LensData{l->p, l->q};
  return std::nullopt;
}

bool lens_like(const Manifold& m) { return as_lens(m).has_value(); }

// Lens spaces may also appear as S^2 Seifert spaces with few fibers.
bool maybe_lens(const Manifold& m) {
  if (auto* s = m.get_if<shape::SfsS2>()) return s->fibers.size() <= 2;
  if (auto* t = m.get_if<shape::OpaqueTag>()) return t->label == kLensTypeTag;
  return false;
}

Manifold mirror(const shape::SfsS2& s) {
  std::vector<Fiber> fibers;
  for (const auto& f : s.fibers) fibers.push_back({f.alpha, -f.beta});
  return sfs_s2(-s.e, std::move(fibers));
}

// Three-valued multiset matching: equal if some bijection pairs equal elements,
// distinct if no bijection avoids a distinct pair.
Equality compare_multisets(const std::vector<Manifold>& a, const std::vector<Manifold>& b) {
  if (a.size() != b.size()) return Equality::distinct;
  const std::size_t n = a.size();
  std::vector<std::vector<Equality>> table(n, std::vector<Equality>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = manifold_compare(a[i], b[j]);

  std::vector<bool> used(n, false);
  std::function<bool(std::size_t, bool)> match = [&](std::size_t i, bool strict) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      Equality e = table[i][j];
      if (e == Equality::distinct || (strict && e != Equality::equal)) continue;
      used[j] = true;
      bool ok = match(i + 1, strict);
      used[j] = false;
      if (ok) return true;
    }
    return false;
  };
  if (match(0, true)) return Equality::equal;
  if (match(0, false)) return Equality::indeterminate;
  return Equality::distinct;
}

}  // namespace

bool lens_homeomorphic(const Manifold& a, const Manifold& b) {
  auto la = as_lens(a), lb = as_lens(b);
  if (!la || !lb) throw InvalidArgument("lens_homeomorphic needs lens spaces, got " + to_string(a) + " and " + to_string(b));
  // Both are in canonical form, so the orbit test reduces to equality.
  return la->p == lb->p && la->q == lb->q;
}

std::string to_string(Equality e) {
  switch (e) {
    case Equality::equal: return "equal";
    case Equality::distinct: return "distinct";
    case Equality::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Equality manifold_compare(const Manifold& a, const Manifold& b) {
  if (lens_like(a) && lens_like(b)) return lens_homeomorphic(a, b) ? Equality::equal : Equality::distinct;
  if ((lens_like(a) && maybe_lens(b)) || (maybe_lens(a) && lens_like(b))) {
    try {
      return h1(a) == h1(b) ? Equality::indeterminate : Equality::distinct;
    } catch (const Indeterminate&) {
      return Equality::indeterminate;
    }
  }

  const auto& sa = a.shape();
  const auto& sb = b.shape();

  // Exact and orders-only Seifert spaces over S^2 can only be told apart by orders.
  auto orders_of = [](const Manifold& m) -> std::optional<std::vector<Integer>> {
    if (auto* s = m.get_if<shape::SfsOrdersOnly>(); s && s->base == SfsBase::S2) return s->orders;
    if (auto* s = m.get_if<shape::SfsS2>(); s && s->fibers.size() >= 3) {
      std::vector<Integer> orders;
      for (const auto& f : s->fibers) orders.push_back(f.alpha);
      std::sort(orders.begin(), orders.end());
      return orders;
    }
    return std::nullopt;
  };
  if (sa.index() != sb.index()) {
    auto oa = orders_of(a), ob = orders_of(b);
    if (oa && ob) return *oa == *ob ? Equality::indeterminate : Equality::distinct;
    if (maybe_lens(a) && maybe_lens(b)) return Equality::indeterminate;
    return Equality::distinct;
  }

  return std::visit(
      overloaded{
          [&](const shape::SfsS2& x) {
            const auto& y = std::get<shape::SfsS2>(sb);
            if (a == b || mirror(x) == b) return Equality::equal;
            if (x.fibers.size() >= 3 && y.fibers.size() >= 3) return Equality::distinct;
            return h1(a) == h1(b) ? Equality::indeterminate : Equality::distinct;
          },
          [&](const shape::SfsOrdersOnly&) {
            return a == b ? Equality::indeterminate : Equality::distinct;
          },
          [&](const shape::CableSpace& x) {
            const auto& y = std::get<shape::CableSpace>(sb);
            if (x.t != y.t) return Equality::distinct;
            if (x.s == y.s || x.s == mod(-y.s, y.t)) return Equality::equal;
            return Equality::indeterminate;
          },
          [&](const shape::ConnSum& x) {
            return compare_multisets(x.summands, std::get<shape::ConnSum>(sb).summands);
          },
          [&](const shape::TorusUnion& x) {
            const auto& y = std::get<shape::TorusUnion>(sb);
            if (x.pieces.size() != y.pieces.size()) return Equality::indeterminate;
            Equality result = Equality::equal;
            for (std::size_t i = 0; i < x.pieces.size(); ++i)
              if (manifold_compare(x.pieces[i], y.pieces[i]) != Equality::equal) result = Equality::indeterminate;
            return result;
          },
          [&](const shape::OpaqueTag& x) {
            const auto& y = std::get<shape::OpaqueTag>(sb);
            if (x.label != y.label) return Equality::distinct;
            return x.label == kLensTypeTag ? Equality::indeterminate : Equality::equal;
          },
          [](const auto&) { return Equality::equal; },
      },
      sa);
}

bool manifold_equal(const Manifold& a, const Manifold& b) {
  Equality e = manifold_compare(a, b);
  if (e == Equality::indeterminate)
    throw Indeterminate("cannot decide whether " + to_string(a) + " and " + to_string(b) + " are homeomorphic");
  return e == Equality::equal;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<Manifold>& ms, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += sep;
    out += to_string(ms[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Manifold& m) {
  return std::visit(
      overloaded{
          [](const shape::S3&) -> std::string { return "S3"; },
          [](const shape::Lens& l) { return "L(" + l.p.str() + "," + l.q.str() + ")"; },
          [](const shape::SfsS2& s) {
            std::string out = "SFS(" + s.e.str() + ";";
            for (std::size_t i = 0; i < s.fibers.size(); ++i) {
              if (i) out += ",";
              out += s.fibers[i].beta.str() + "/" + s.fibers[i].alpha.str();
            }
            return out + ")";
          },
          [](const shape::SfsOrdersOnly& s) {
            std::string out = s.base == SfsBase::S2 ? "S2(" : (s.base == SfsBase::D2 ? "D2(" : "M2(");
            for (std::size_t i = 0; i < s.orders.size(); ++i) {
              if (i) out += ",";
              out += s.orders[i].str();
            }
            return out + ")";
          },
          [](const shape::S1xS2&) -> std::string { return "S1xS2"; },
          [](const shape::SolidTorus&) -> std::string { return "ST"; },
          [](const shape::T2xI&) -> std::string { return "T2xI"; },
          [](const shape::CableSpace& c) { return "C(" + c.s.str() + "," + c.t.str() + ")"; },
          [](const shape::ZxS1&) -> std::string { return "ZxS1"; },
          [](const shape::ConnSum& cs) { return join(cs.summands, "#"); },
          [](const shape::TorusUnion& u) { return "U[" + join(u.pieces, ",") + "]"; },
          [](const shape::OpaqueTag& t) { return "<" + t.label + ">"; },
      },
      m.shape());
}

}  // namespace dehn
