#include "dehn/families.hpp"

#include "dehn/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

namespace dehn {

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::exact: return "exact";
    case ClaimKind::orders_only: return "orders_only";
    case ClaimKind::tag: return "tag";
  }
  return "exact";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

const FillingClaim* FamilySpec::find_claim(const Slope& r) const {
  for (const auto& c : claims)
    if (c.slope == r) return &c;
  return nullptr;
}

namespace {

const Slope kInf = Slope::infinity();

Slope sl(long long p, long long q = 1) { return Slope(Integer(p), Integer(q)); }

Manifold lens_sum(const Integer& a, const Integer& b) {
  return connected_sum({lens_normalize(a, 1), lens_normalize(b, 1)});
}

FillingClaim exact(Slope r, std::string formula, std::function<Manifold(const ParamValues&)> f) {
  return {std::move(r), ClaimKind::exact, std::move(formula), std::move(f)};
}

FillingClaim orders(Slope r, std::string formula, std::function<Manifold(const ParamValues&)> f) {
  return {std::move(r), ClaimKind::orders_only, std::move(formula), std::move(f)};
}

FillingClaim tag(Slope r, std::string label) {
  std::string formula = "<" + label + ">";
  return {std::move(r), ClaimKind::tag, formula, [label](const ParamValues&) { return opaque_tag(label); }};
}

FillingClaim constant(Slope r, ClaimKind kind, Manifold m) {
  std::string formula = to_string(m);
  return {std::move(r), kind, std::move(formula), [m](const ParamValues&) { return m; }};
}

CheckSpec distance(Slope a, Slope b, long long expected) {
  CheckSpec c;
  c.kind = CheckKind::distance;
  c.a = std::move(a);
  c.b = std::move(b);
  c.expected_distance = expected;
  return c;
}

CheckSpec reducible(Slope a) {
  CheckSpec c;
  c.kind = CheckKind::reducible;
  c.a = std::move(a);
  return c;
}

CheckSpec finite(Slope a, FiniteType t) {
  CheckSpec c;
  c.kind = CheckKind::finite_type;
  c.a = std::move(a);
  c.expected_type = t;
  return c;
}

CheckSpec distinct(Slope a, Slope b) {
  CheckSpec c;
  c.kind = CheckKind::distinctness;
  c.a = std::move(a);
  c.b = std::move(b);
  return c;
}

CheckSpec wellformed() { return CheckSpec{}; }

CheckSpec homeomorphic(Slope a, std::string family, ParamValues params, Slope b) {
  CheckSpec c;
  c.kind = CheckKind::homeomorphic_to;
  c.a = std::move(a);
  c.b = std::move(b);
  c.other_family = std::move(family);
  c.other_params = std::move(params);
  return c;
}

CheckSpec only_when(CheckSpec c, std::string text, std::function<bool(const ParamValues&)> pred) {
  c.applies = std::move(pred);
  c.applies_text = std::move(text);
  return c;
}

// The standard checks for a designated (reducible, finite) pair.
void add_pair(FamilySpec& f, Slope red, Slope fin, std::optional<FiniteType> type) {
  f.designated.push_back({red, fin});
  f.checks.push_back(distance(red, fin, 1));
  f.checks.push_back(reducible(red));
  if (type) f.checks.push_back(finite(fin, *type));
}

auto p_at_least(long long lo) {
  return [lo](const ParamValues& v) { return v[0] >= lo; };
}

std::vector<FamilySpec> build_catalog() {
  std::vector<FamilySpec> out;

  {
    FamilySpec f;
    f.name = "cyclic";
    f.summary = "reducible and cyclic fillings at distance 1";
    f.params = {{"p"}, {"q"}};
    f.domain_text = "p >= 2, q >= 4";
    f.domain = [](const ParamValues& v) { return v[0] >= 2 && v[1] >= 4; };
    f.claims = {
        exact(sl(0), "L(p,1) # L(q-2,1)", [](const ParamValues& v) { return lens_sum(v[0], v[1] - 2); }),
        exact(kInf, "L((3p+2)(-2q+1)+6, (3p+2)q-3)",
              [](const ParamValues& v) {
                Integer a = 3 * v[0] + 2;
                return lens_normalize(a * (-2 * v[1] + 1) + 6, a * v[1] - 3);
              }),
        tag(sl(-1), "toroidal_irreducible_nonSFS"),
    };
    add_pair(f, sl(0), kInf, FiniteType::cyclic);
    f.checks.push_back(distinct(kInf, sl(-1)));
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "ew_prior";
    f.summary = "earlier reducible and cyclic family";
    f.params = {{"p"}};
    f.domain_text = "p >= 2";
    f.domain = p_at_least(2);
    f.claims = {
        exact(sl(0), "L((p-1)(p+3)+1, p+3)",
              [](const ParamValues& v) { return lens_normalize((v[0] - 1) * (v[0] + 3) + 1, v[0] + 3); }),
        constant(sl(1, 3), ClaimKind::exact, lens_sum(3, 2)),
    };
    add_pair(f, sl(1, 3), sl(0), FiniteType::cyclic);
    f.checks.push_back(only_when(homeomorphic(sl(0), "bz_w6", {}, kInf), "p = 2",
                                 [](const ParamValues& v) { return v[0] == 2; }));
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "bz_w6";
    f.summary = "first example realizing distance 1";
    f.domain_text = "no parameters";
    f.domain = [](const ParamValues&) { return true; };
    f.claims = {
        constant(sl(1), ClaimKind::exact, lens_sum(3, 2)),
        constant(kInf, ClaimKind::exact, lens_normalize(6, 1)),
        constant(sl(2), ClaimKind::orders_only, sfs_normalize_orders({2, 2, 4})),
    };
    add_pair(f, sl(1), kInf, FiniteType::cyclic);
    f.checks.push_back(finite(sl(2), FiniteType::dihedral));
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "dihedral";
    f.summary = "reducible and dihedral fillings at distance 1";
    f.params = {{"p"}, {"q"}};
    f.domain_text = "p >= 3, q >= 3";
    f.domain = [](const ParamValues& v) { return v[0] >= 3 && v[1] >= 3; };
    f.claims = {
        exact(sl(0), "L(p,1) # L(2q+1,1)", [](const ParamValues& v) { return lens_sum(v[0], 2 * v[1] + 1); }),
        orders(kInf, "S2(2,2,2pq-p-2)",
               [](const ParamValues& v) {
                 return sfs_normalize_orders({2, 2, 2 * v[0] * v[1] - v[0] - 2});
               }),
    };
    add_pair(f, sl(0), kInf, FiniteType::dihedral);
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "dihedral_aux_Np";
    f.summary = "two-cusped manifold filling to the dihedral family";
    f.params = {{"p"}};
    f.domain_text = "p >= 3";
    f.domain = p_at_least(3);
    f.claims = {
        orders(kInf, "D2(2,p+2)",
               [](const ParamValues& v) { return sfs_normalize_orders(SfsBase::D2, {2, v[0] + 2}); }),
        exact(sl(0), "U[C(1,2), D2(2,p)]",
              [](const ParamValues& v) {
                return torus_union({cable_space(1, 2), sfs_normalize_orders(SfsBase::D2, {2, v[0]})});
              }),
        orders(sl(1), "D2(2,p-2)",
               [](const ParamValues& v) { return sfs_normalize_orders(SfsBase::D2, {2, v[0] - 2}); }),
        constant(sl(2), ClaimKind::exact, zxs1()),
    };
    f.checks = {distance(sl(0), sl(2), 2), distinct(kInf, sl(1)), wellformed()};
    f.edges = {{"M_{p,q}=N_p(1/q)", "dihedral"}};
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "tetrahedral";
    f.summary = "reducible and tetrahedral fillings at distance 1";
    f.domain_text = "no parameters";
    f.domain = [](const ParamValues&) { return true; };
    f.claims = {
        constant(sl(0), ClaimKind::exact, lens_sum(3, 3)),
        constant(kInf, ClaimKind::orders_only, sfs_normalize_orders({2, 3, 3})),
        constant(sl(1), ClaimKind::orders_only, sfs_normalize_orders({2, 2, 7})),
    };
    add_pair(f, sl(0), kInf, FiniteType::tetrahedral);
    f.checks.push_back(finite(sl(1), FiniteType::dihedral));
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "octahedral";
    f.summary = "reducible and octahedral fillings at distance 1";
    f.params = {{"p"}};
    f.domain_text = "p >= 3";
    f.domain = p_at_least(3);
    f.claims = {
        exact(sl(0), "L(2,1) # S2(4,p,2p+1)",
              [](const ParamValues& v) {
                return connected_sum({lens_normalize(2, 1), sfs_normalize_orders({4, v[0], 2 * v[0] + 1})});
              }),
        constant(kInf, ClaimKind::orders_only, sfs_normalize_orders({2, 3, 4})),
    };
    add_pair(f, sl(0), kInf, FiniteType::octahedral);
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "octahedral_aux_Np";
    f.summary = "two-cusped manifold filling to the octahedral family";
    f.params = {{"p"}};
    f.domain_text = "p >= 3";
    f.domain = p_at_least(3);
    f.claims = {
        exact(sl(0), "L(2,1) # D2(p,2p+1)",
              [](const ParamValues& v) {
                return connected_sum(
                    {lens_normalize(2, 1), sfs_normalize_orders(SfsBase::D2, {v[0], 2 * v[0] + 1})});
              }),
        tag(sl(4), "toroidal"),
    };
    f.checks = {distance(sl(0), sl(4), 4), reducible(sl(0)), wellformed()};
    f.edges = {{"M_p=N_p(4)", "octahedral"}};
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "icosahedral_lee";
    f.summary = "S1xS2 and toroidal fillings at distance 2, icosahedral at four parameters";
    f.params = {{"p"}, {"q"}};
    // (p,q) != (+-2,+-1) is read as all four sign combinations.
    f.domain_text = "p not in {0,1,-1}, q != 0, (p,q) not in {(2,1),(2,-1),(-2,1),(-2,-1)}";
    f.domain = [](const ParamValues& v) {
      const Integer &p = v[0], &q = v[1];
      if (p == 0 || p == 1 || p == -1 || q == 0) return false;
      return !(abs(p) == 2 && abs(q) == 1);
    };
    f.claims = {
        constant(sl(-1, 2), ClaimKind::exact, s1xs2()),
        orders(sl(0), "S2(|p-1|, |2q-1|, |pq+q-1|)",
               [](const ParamValues& v) {
                 const Integer &p = v[0], &q = v[1];
                 return sfs_normalize_orders({abs(p - 1), abs(2 * q - 1), abs(p * q + q - 1)});
               }),
        orders(sl(-1), "S2(|p+1|, |2q+1|, |pq-q-1|)",
               [](const ParamValues& v) {
                 const Integer &p = v[0], &q = v[1];
                 return sfs_normalize_orders({abs(p + 1), abs(2 * q + 1), abs(p * q - q - 1)});
               }),
        tag(kInf, "toroidal"),
    };
    auto at = [](std::vector<std::pair<int, int>> pts) {
      return [pts](const ParamValues& v) {
        for (auto [a, b] : pts)
          if (v[0] == a && v[1] == b) return true;
        return false;
      };
    };
    f.designated = {{sl(-1, 2), sl(0)}, {sl(-1, 2), sl(-1)}};
    f.checks = {
        distance(sl(0), sl(-1, 2), 1),
        distance(sl(-1), sl(-1, 2), 1),
        reducible(sl(-1, 2)),
        only_when(finite(sl(0), FiniteType::icosahedral), "(p,q) in {(3,-1),(-4,-1)}", at({{3, -1}, {-4, -1}})),
        only_when(finite(sl(-1), FiniteType::icosahedral), "(p,q) in {(-3,1),(4,1)}", at({{-3, 1}, {4, 1}})),
        distance(sl(-1, 2), kInf, 2),
        wellformed(),
    };
    out.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.name = "icosahedral_second";
    f.summary = "reducible and icosahedral fillings at distance 1";
    f.domain_text = "no parameters";
    f.domain = [](const ParamValues&) { return true; };
    f.claims = {
        constant(sl(0), ClaimKind::exact, lens_sum(3, 4)),
        constant(kInf, ClaimKind::orders_only, sfs_normalize_orders({2, 3, 5})),
        constant(sl(1), ClaimKind::orders_only, sfs_normalize_orders({2, 3, 7})),
    };
    add_pair(f, sl(0), kInf, FiniteType::icosahedral);
    f.checks.push_back(finite(sl(1), FiniteType::not_finite));
    f.checks.push_back(wellformed());
    out.push_back(std::move(f));
  }
  return out;
}

std::string params_text(const FamilySpec& f, const ParamValues& v) {
  std::string out;
  for (std::size_t i = 0; i < f.params.size() && i < v.size(); ++i) {
    if (i) out += ", ";
    out += f.params[i].name + "=" + to_string(v[i]);
  }
  return out;
}

void require_domain(const FamilySpec& f, const ParamValues& v) {
  if (v.size() != f.params.size())
    throw DomainError(f.name + " takes " + std::to_string(f.params.size()) + " parameter(s), got " +
                      std::to_string(v.size()));
  if (!f.domain(v)) throw DomainError(f.name + ": (" + params_text(f, v) + ") is outside " + f.domain_text);
}

}  // namespace

const std::vector<FamilySpec>& family_catalog() {
  static const std::vector<FamilySpec> catalog = build_catalog();
  return catalog;
}

const FamilySpec& find_family(std::string_view name) {
  for (const auto& f : family_catalog())
    if (f.name == name) return f;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

Manifold evaluate_filling(const FamilySpec& family, const ParamValues& params, const Slope& slope) {
  require_domain(family, params);
  const FillingClaim* claim = family.find_claim(slope);
  if (!claim) throw DomainError(family.name + " makes no claim about slope " + to_string(slope));
  return claim->evaluate(params);
}

CheckStatus VerificationReport::overall() const {
  CheckStatus s = CheckStatus::pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
    if (c.status == CheckStatus::indeterminate) s = CheckStatus::indeterminate;
  }
  return s;
}

std::string describe(const CheckSpec& c) {
  std::string out;
  switch (c.kind) {
    case CheckKind::distance:
      out = "distance(" + to_string(c.a) + "," + to_string(c.b) + ")=" + to_string(c.expected_distance);
      break;
    case CheckKind::finite_type: out = "finite_type(" + to_string(c.a) + ")=" + to_string(c.expected_type); break;
    case CheckKind::reducible: out = "reducible(" + to_string(c.a) + ")"; break;
    case CheckKind::distinctness: out = "distinct(" + to_string(c.a) + "," + to_string(c.b) + ")"; break;
    case CheckKind::wellformed: out = "wellformed"; break;
    case CheckKind::homeomorphic_to:
      out = "homeomorphic(" + to_string(c.a) + "," + c.other_family + ":" + to_string(c.b) + ")";
      break;
  }
  return out;
}

VerificationReport verify_family(const FamilySpec& family, const ParamValues& params) {
  require_domain(family, params);
  VerificationReport report{family.name, params, {}, {}};

  // Evaluate every claim once; ill-formed ones are reported by the wellformed check.
  std::map<Slope, Manifold> value;
  std::map<Slope, std::string> failure;
  for (const auto& claim : family.claims) {
    try {
      Manifold m = claim.evaluate(params);
      report.fillings.emplace_back(claim.slope, m);
      value.emplace(claim.slope, std::move(m));
    } catch (const Error& e) {
      failure.emplace(claim.slope, e.what());
    }
  }

  auto filling = [&](const Slope& r) -> const Manifold* {
    auto it = value.find(r);
    return it == value.end() ? nullptr : &it->second;
  };
  auto missing = [&](const Slope& r) {
    auto it = failure.find(r);
    return it == failure.end() ? "no claim at slope " + to_string(r) : to_string(r) + ": " + it->second;
  };

  for (const auto& spec : family.checks) {
    if (spec.applies && !spec.applies(params)) continue;
    CheckResult res{describe(spec), CheckStatus::fail, ""};
    switch (spec.kind) {
      case CheckKind::distance: {
        Integer d = slope_distance(spec.a, spec.b);
        res.status = d == spec.expected_distance ? CheckStatus::pass : CheckStatus::fail;
        res.witness = "delta=" + to_string(d);
        break;
      }
      case CheckKind::reducible: {
        const Manifold* m = filling(spec.a);
        if (!m) {
          res.witness = missing(spec.a);
          break;
        }
        res.status = is_reducible(*m) ? CheckStatus::pass : CheckStatus::fail;
        res.witness = to_string(*m);
        break;
      }
      case CheckKind::finite_type: {
        const Manifold* m = filling(spec.a);
        if (!m) {
          res.witness = missing(spec.a);
          break;
        }
        FiniteType t = classify_finite_type(*m);
        if (t == FiniteType::unknown)
          res.status = CheckStatus::indeterminate;
        else
          res.status = t == spec.expected_type ? CheckStatus::pass : CheckStatus::fail;
        res.witness = to_string(*m) + " is " + to_string(t);
        break;
      }
      case CheckKind::distinctness: {
        const Manifold *x = filling(spec.a), *y = filling(spec.b);
        if (!x || !y) {
          res.witness = missing(x ? spec.b : spec.a);
          break;
        }
        Equality e = manifold_compare(*x, *y);
        res.status = e == Equality::distinct ? CheckStatus::pass
                     : e == Equality::equal  ? CheckStatus::fail
                                             : CheckStatus::indeterminate;
        res.witness = to_string(*x) + " vs " + to_string(*y) + ": " + to_string(e);
        break;
      }
      case CheckKind::wellformed: {
        if (failure.empty()) {
          res.status = CheckStatus::pass;
          res.witness = std::to_string(value.size()) + " claims evaluated";
        } else {
          res.witness = missing(failure.begin()->first);
        }
        break;
      }
      case CheckKind::homeomorphic_to: {
        const Manifold* x = filling(spec.a);
        if (!x) {
          res.witness = missing(spec.a);
          break;
        }
        Manifold y = evaluate_filling(find_family(spec.other_family), spec.other_params, spec.b);
        Equality e = manifold_compare(*x, y);
        res.status = e == Equality::equal      ? CheckStatus::pass
                     : e == Equality::distinct ? CheckStatus::fail
                                               : CheckStatus::indeterminate;
        res.witness = to_string(*x) + " vs " + to_string(y) + ": " + to_string(e);
        break;
      }
    }
    report.checks.push_back(std::move(res));
  }
  return report;
}

std::size_t SweepReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [s](const VerificationReport& r) { return r.overall() == s; }));
}

namespace {

unsigned sweep_threads(std::size_t work) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DEHNCALC_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

}  // namespace

SweepReport sweep_verify(const FamilySpec& family, const std::vector<ParamRange>& ranges) {
  if (ranges.size() != family.params.size())
    throw InvalidArgument(family.name + " needs " + std::to_string(family.params.size()) + " parameter range(s)");
  SweepReport out{family.name, ranges, {}, 0};

  // Enumerate the grid in lexicographic order.
  std::vector<ParamValues> grid;
  ParamValues cur;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == ranges.size()) {
      if (family.domain(cur))
        grid.push_back(cur);
      else
        ++out.skipped;
      return;
    }
    for (Integer v = ranges[i].lo; v <= ranges[i].hi; ++v) {
      cur.push_back(v);
      walk(i + 1);
      cur.pop_back();
    }
  };
  walk(0);

  std::vector<std::optional<VerificationReport>> slots(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      try {
        slots[i] = verify_family(family, grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = sweep_threads(grid.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  out.points.reserve(slots.size());
  for (auto& s : slots) out.points.push_back(std::move(*s));
  return out;
}

}  // namespace dehn
