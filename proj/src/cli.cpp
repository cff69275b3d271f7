#include "dehn/cli.hpp"

#include "dehn/branched_cover.hpp"
#include "dehn/cable.hpp"
#include "dehn/diagram.hpp"
#include "dehn/error.hpp"
#include "dehn/families.hpp"
#include "dehn/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace dehn {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

json jint(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json h1_json(const Manifold& m) {
  try {
    H1Result h = h1(m);
    if (h.finite) return {{"finite", true}, {"order", jint(h.order)}};
    return {{"finite", false}, {"rank", h.free_rank}};
  } catch (const Indeterminate&) {
    return "indeterminate";
  }
}

std::string h1_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j["finite"].get<bool>()) return "Z/" + j["order"].dump();
  return "rank " + j["rank"].dump();
}

ParamRange parse_range(const std::string& s, const char* flag) {
  auto to_int = [&](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size() || !std::all_of(t.begin() + static_cast<long>(i), t.end(), ::isdigit))
      throw UsageError(std::string(flag) + " expects N or A..B, got '" + s + "'");
    Integer v(t.substr(i));
    return t[0] == '-' ? Integer(-v) : v;
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    Integer v = to_int(s);
    return {v, v};
  }
  ParamRange r{to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError(std::string(flag) + " range is empty: '" + s + "'");
  return r;
}

struct FamilyArgs {
  std::string name;
  std::string p, q;
};

// Matches --p/--q against the family's parameter names.
std::vector<ParamRange> family_ranges(const FamilySpec& f, const FamilyArgs& a) {
  std::vector<ParamRange> out;
  std::vector<std::string> given;
  if (!a.p.empty()) given.push_back("p");
  if (!a.q.empty()) given.push_back("q");
  for (const auto& g : given) {
    bool known = std::any_of(f.params.begin(), f.params.end(), [&](const ParamSpec& p) { return p.name == g; });
    if (!known) throw UsageError(f.name + " has no parameter " + g);
  }
  for (const auto& p : f.params) {
    const std::string& v = p.name == "p" ? a.p : a.q;
    if (v.empty()) throw UsageError(f.name + " needs --" + p.name);
    out.push_back(parse_range(v, p.name == "p" ? "--p" : "--q"));
  }
  return out;
}

ParamValues single_point(const FamilySpec& f, const FamilyArgs& a) {
  ParamValues v;
  for (const auto& r : family_ranges(f, a)) {
    if (r.lo != r.hi) throw UsageError("expected a single parameter value, not a range");
    v.push_back(r.lo);
  }
  return v;
}

json params_json(const FamilySpec& f, const ParamValues& v) {
  json j = json::object();
  for (std::size_t i = 0; i < f.params.size(); ++i) j[f.params[i].name] = jint(v[i]);
  return j;
}

std::vector<std::string> param_cells(const ParamValues& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> param_columns(const FamilySpec& f) {
  std::vector<std::string> out;
  for (const auto& p : f.params) out.push_back(p.name);
  return out;
}

ReportStatus from_check(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return ReportStatus::ok;
    case CheckStatus::fail: return ReportStatus::fail;
    case CheckStatus::indeterminate: return ReportStatus::indeterminate;
  }
  return ReportStatus::fail;
}

// ---------------------------------------------------------------------------

void cmd_distance(Report& rep, const std::string& a, const std::string& b) {
  Slope r1 = parse_slope(a), r2 = parse_slope(b);
  Integer d = slope_distance(r1, r2);
  rep.results.push_back({{"r1", to_string(r1)}, {"r2", to_string(r2)}, {"distance", jint(d)}});
  rep.columns = {"r1", "r2", "distance"};
  rep.rows.push_back({to_string(r1), to_string(r2), to_string(d)});
}

void cmd_classify(Report& rep, const std::string& expr, const std::string& other, const std::string& expect) {
  Manifold m = parse_manifold(expr);
  FiniteType t = classify_finite_type(m);
  json h = h1_json(m);
  json rec = {{"input", expr},
              {"manifold", to_string(m)},
              {"finite_type", to_string(t)},
              {"reducible", is_reducible(m)},
              {"h1", h}};
  rep.columns = {"input", "manifold", "finite_type", "reducible", "h1"};
  std::vector<std::string> row = {expr, to_string(m), to_string(t), is_reducible(m) ? "true" : "false", h1_text(h)};
  if (t == FiniteType::unknown) rep.note(ReportStatus::indeterminate);

  if (!other.empty()) {
    Manifold n = parse_manifold(other);
    Equality e = manifold_compare(m, n);
    rec["compare"] = {{"other", to_string(n)}, {"equality", to_string(e)}};
    rep.columns.insert(rep.columns.end(), {"other", "equality"});
    row.insert(row.end(), {to_string(n), to_string(e)});
    if (e == Equality::indeterminate) rep.note(ReportStatus::indeterminate);
  }
  if (!expect.empty()) {
    auto want = finite_type_from_string(expect);
    if (!want) throw UsageError("unknown finite type '" + expect + "'");
    bool ok = t == *want;
    rec["expect"] = {{"finite_type", to_string(*want)}, {"status", ok ? "pass" : t == FiniteType::unknown ? "indeterminate" : "fail"}};
    rep.columns.insert(rep.columns.end(), {"expected", "expect_status"});
    row.insert(row.end(), {to_string(*want), rec["expect"]["status"].get<std::string>()});
    if (!ok && t != FiniteType::unknown) rep.note(ReportStatus::fail);
  }
  rep.results.push_back(std::move(rec));
  rep.rows.push_back(std::move(row));
}

void cmd_cover(Report& rep, const std::string& expr) {
  LinkExpr l = parse_link(expr);
  Manifold m = dbc_link(l);
  json h = h1_json(m);
  Integer det = link_determinant(l);
  rep.results.push_back({{"link", to_string(l)}, {"cover", to_string(m)}, {"h1", h}, {"determinant", jint(det)}});
  rep.columns = {"link", "cover", "h1", "determinant"};
  rep.rows.push_back({to_string(l), to_string(m), h1_text(h), to_string(det)});
}

void cmd_cable(Report& rep, const std::string& s, const std::string& t, const std::string& gamma,
               const std::string& r, std::optional<long long> v, std::optional<long long> w) {
  Integer si = parse_range(s, "s").lo, ti = parse_range(t, "t").lo;
  CableContext ctx(si, ti, parse_slope(gamma));
  Slope slope = parse_slope(r);
  CableFilling fill = cable_fill(ctx, slope);
  Integer md = meridian_distance_cabled(ctx.t(), fill.distance_to_cabling_slope);
  json rec = {{"space", to_string(ctx.space())},
              {"cabling_slope", to_string(ctx.cabling_slope())},
              {"slope", to_string(slope)},
              {"distance_to_cabling_slope", jint(fill.distance_to_cabling_slope)},
              {"result", to_string(fill.result)},
              {"extension", fill.extension},
              {"meridian_distance_cabled", jint(md)}};
  rep.columns = {"space", "cabling_slope", "slope", "distance", "result", "extension", "meridian_distance_cabled"};
  std::vector<std::string> row = {to_string(ctx.space()), to_string(ctx.cabling_slope()), to_string(slope),
                                  to_string(fill.distance_to_cabling_slope), to_string(fill.result),
                                  fill.extension ? "true" : "false", to_string(md)};
  if (v) {
    if (*v < 2) throw UsageError("--v must be at least 2");
    Integer b = meridian_distance_squared(*v, fill.distance_to_cabling_slope);
    rec["meridian_distance_squared"] = jint(b);
    rep.columns.push_back("meridian_distance_squared");
    row.push_back(to_string(b));
  }
  if (w) {
    if (*w < 2) throw UsageError("--w must be at least 2");
    Integer b = winding_bound(*w);
    rec["winding_bound"] = jint(b);
    rep.columns.push_back("winding_bound");
    row.push_back(to_string(b));
  }
  rep.results.push_back(std::move(rec));
  rep.rows.push_back(std::move(row));
}

void cmd_family_list(Report& rep) {
  rep.columns = {"family", "params", "domain", "slope", "kind", "claim"};
  for (const auto& f : family_catalog()) {
    json params = json::array();
    std::string pnames;
    for (const auto& p : f.params) {
      params.push_back(p.name);
      pnames += (pnames.empty() ? "" : ",") + p.name;
    }
    json claims = json::array();
    for (const auto& c : f.claims) {
      claims.push_back({{"slope", to_string(c.slope)}, {"kind", to_string(c.kind)}, {"claim", c.formula}});
      rep.rows.push_back({f.name, pnames, f.domain_text, to_string(c.slope), to_string(c.kind), c.formula});
    }
    json checks = json::array();
    for (const auto& c : f.checks) {
      json cj = {{"check", describe(c)}};
      if (c.applies) cj["applies"] = c.applies_text;
      checks.push_back(std::move(cj));
    }
    json pairs = json::array();
    for (const auto& d : f.designated)
      pairs.push_back({{"reducible", to_string(d.reducible)}, {"finite", to_string(d.finite)}});
    json edges = json::array();
    for (const auto& e : f.edges) edges.push_back({{"relation", e.relation}, {"target", e.target}});
    rep.results.push_back({{"family", f.name},
                           {"summary", f.summary},
                           {"params", params},
                           {"domain", f.domain_text},
                           {"claims", claims},
                           {"checks", checks},
                           {"designated_pairs", pairs},
                           {"edges", edges}});
  }
}

void cmd_family_fill(Report& rep, const FamilyArgs& a, const std::string& slope_text) {
  const FamilySpec& f = find_family(a.name);
  ParamValues v = single_point(f, a);
  std::vector<const FillingClaim*> claims;
  if (slope_text.empty()) {
    for (const auto& c : f.claims) claims.push_back(&c);
  } else {
    Slope r = parse_slope(slope_text);
    const FillingClaim* c = f.find_claim(r);
    if (!c) throw DomainError(f.name + " makes no claim about slope " + to_string(r));
    claims.push_back(c);
  }
  rep.columns = param_columns(f);
  rep.columns.insert(rep.columns.begin(), "family");
  rep.columns.insert(rep.columns.end(), {"slope", "kind", "claim", "manifold"});
  for (const FillingClaim* c : claims) {
    json rec = {{"family", f.name}, {"params", params_json(f, v)}, {"slope", to_string(c->slope)},
                {"kind", to_string(c->kind)}, {"claim", c->formula}};
    std::string shown;
    try {
      Manifold m = evaluate_filling(f, v, c->slope);
      shown = to_string(m);
      rec["manifold"] = shown;
    } catch (const IllFormedClaim& e) {
      shown = std::string("error: ") + e.what();
      rec["error"] = e.what();
      rep.note(ReportStatus::fail);
    }
    std::vector<std::string> row = param_cells(v);
    row.insert(row.begin(), f.name);
    row.insert(row.end(), {to_string(c->slope), to_string(c->kind), c->formula, shown});
    rep.results.push_back(std::move(rec));
    rep.rows.push_back(std::move(row));
  }
}

json report_json(const FamilySpec& f, const VerificationReport& r) {
  json fillings = json::array();
  for (const auto& [s, m] : r.fillings) fillings.push_back({{"slope", to_string(s)}, {"manifold", to_string(m)}});
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  return {{"family", f.name},
          {"params", params_json(f, r.params)},
          {"status", to_string(r.overall())},
          {"fillings", fillings},
          {"checks", checks}};
}

void cmd_family_verify(Report& rep, const FamilyArgs& a) {
  const FamilySpec& f = find_family(a.name);
  VerificationReport r = verify_family(f, single_point(f, a));
  rep.note(from_check(r.overall()));
  rep.results.push_back(report_json(f, r));
  rep.columns = param_columns(f);
  rep.columns.insert(rep.columns.begin(), "family");
  rep.columns.insert(rep.columns.end(), {"check", "status", "witness"});
  for (const auto& c : r.checks) {
    std::vector<std::string> row = param_cells(r.params);
    row.insert(row.begin(), f.name);
    row.insert(row.end(), {c.name, to_string(c.status), c.witness});
    rep.rows.push_back(std::move(row));
  }
}

void cmd_family_sweep(Report& rep, const FamilyArgs& a) {
  const FamilySpec& f = find_family(a.name);
  SweepReport s = sweep_verify(f, family_ranges(f, a));
  json ranges = json::object();
  for (std::size_t i = 0; i < f.params.size(); ++i)
    ranges[f.params[i].name] = {jint(s.ranges[i].lo), jint(s.ranges[i].hi)};
  json points = json::array();
  rep.columns = param_columns(f);
  rep.columns.insert(rep.columns.end(), {"status", "pass", "fail", "indeterminate", "witness"});
  for (const auto& r : s.points) {
    std::size_t counts[3] = {0, 0, 0};
    json flagged = json::array();
    std::string first;
    for (const auto& c : r.checks) {
      ++counts[static_cast<int>(c.status)];
      if (c.status != CheckStatus::pass) {
        flagged.push_back({{"check", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
        if (first.empty()) first = c.name + ": " + c.witness;
      }
    }
    rep.note(from_check(r.overall()));
    json pj = {{"params", params_json(f, r.params)}, {"status", to_string(r.overall())}, {"checks", r.checks.size()}};
    if (!flagged.empty()) pj["flagged"] = std::move(flagged);
    points.push_back(std::move(pj));
    std::vector<std::string> row = param_cells(r.params);
    row.insert(row.end(), {to_string(r.overall()), std::to_string(counts[0]), std::to_string(counts[1]),
                           std::to_string(counts[2]), first});
    rep.rows.push_back(std::move(row));
  }
  rep.results.push_back({{"family", f.name},
                         {"ranges", ranges},
                         {"points", s.points.size()},
                         {"skipped", s.skipped},
                         {"pass", s.count(CheckStatus::pass)},
                         {"fail", s.count(CheckStatus::fail)},
                         {"indeterminate", s.count(CheckStatus::indeterminate)},
                         {"grid", std::move(points)}});
}

void add_oracle(Report& rep, const LinkExpr& l) {
  OracleReport o = oracle_cross_check(l);
  json g = o.goeritz ? jint(*o.goeritz) : json(nullptr);
  json h = o.cover_h1 ? jint(*o.cover_h1) : json("indeterminate");
  rep.results.push_back({{"link", to_string(l)},
                         {"goeritz", g},
                         {"formula", jint(o.formula)},
                         {"cover_h1", h},
                         {"match", o.match},
                         {"detail", o.detail}});
  rep.rows.push_back({to_string(l), o.goeritz ? to_string(*o.goeritz) : "-", to_string(o.formula),
                      o.cover_h1 ? to_string(*o.cover_h1) : "indeterminate", o.match ? "true" : "false",
                      o.detail});
  if (!o.match) rep.note(ReportStatus::fail);
}

void cmd_oracle(Report& rep, const std::vector<std::string>& exprs, const std::string& batch,
                std::optional<std::size_t> random, std::uint64_t seed) {
  rep.columns = {"link", "goeritz", "formula", "cover_h1", "match", "detail"};
  for (const auto& e : exprs) add_oracle(rep, parse_link(e));
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) throw UsageError("cannot read batch file '" + batch + "'");
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        add_oracle(rep, parse_link(line));
      } catch (const ParseError& e) {
        throw UsageError(batch + ":" + std::to_string(n) + ": " + e.what());
      }
    }
  }
  if (random)
    for (const auto& l : random_montesinos_sample(*random, seed)) add_oracle(rep, l);
  if (rep.rows.empty()) throw UsageError("oracle needs a link expression, --batch or --random");
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& raw) {
  std::vector<std::string> args = raw;
  // "family verify" is accepted as a spelling of "family-verify".
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    const std::string& next = args[i + 1];
    if (args[i] == "family" && (next == "list" || next == "fill" || next == "verify" || next == "sweep")) {
      args[i] = "family-" + next;
      args.erase(args.begin() + static_cast<long>(i) + 1);
      break;
    }
  }

  CLI::App app{"Exact slope, manifold and tangle calculator", "dehncalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));

  Report rep;
  rep.command = raw;
  std::function<void()> action;

  std::vector<std::string> dist;
  auto* distance = app.add_subcommand("distance", "distance between two slopes");
  distance->add_option("slopes", dist, "two slopes")->required()->expected(2);
  distance->callback([&] { action = [&] { cmd_distance(rep, dist[0], dist[1]); }; });

  std::string expr, other, expect;
  auto* classify = app.add_subcommand("classify", "normalize a manifold and classify its finite type");
  classify->add_option("manifold", expr)->required();
  classify->add_option("--compare", other, "second manifold to compare against");
  classify->add_option("--expect", expect, "expected finite type; mismatch is a failure");
  classify->callback([&] { action = [&] { cmd_classify(rep, expr, other, expect); }; });

  std::string link;
  auto* cover = app.add_subcommand("cover", "double branched cover of a link");
  cover->add_option("link", link)->required();
  cover->callback([&] { action = [&] { cmd_cover(rep, link); }; });

  std::vector<std::string> cab;
  std::optional<long long> v, w;
  auto* cable = app.add_subcommand("cable", "fill a cable space C(s,t) with cabling slope gamma");
  cable->add_option("args", cab, "s t gamma slope")->required()->expected(4);
  cable->add_option("--v", v, "cable index for the v^2 distance bound");
  cable->add_option("--w", w, "winding number for the w^2 bound");
  cable->callback([&] { action = [&] { cmd_cable(rep, cab[0], cab[1], cab[2], cab[3], v, w); }; });

  auto* flist = app.add_subcommand("family-list", "list the family catalog");
  flist->callback([&] { action = [&] { cmd_family_list(rep); }; });

  FamilyArgs fam;
  std::string fill_slope;
  auto add_family = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("family", fam.name)->required();
    sub->add_option("--p", fam.p, "value or range A..B");
    sub->add_option("--q", fam.q, "value or range A..B");
    return sub;
  };
  auto* ffill = add_family("family-fill", "evaluate claimed fillings");
  ffill->add_option("--slope", fill_slope, "a single claimed slope");
  ffill->callback([&] { action = [&] { cmd_family_fill(rep, fam, fill_slope); }; });
  add_family("family-verify", "run a family's checks at one parameter point")->callback([&] {
    action = [&] { cmd_family_verify(rep, fam); };
  });
  add_family("family-sweep", "run a family's checks over a parameter grid")->callback([&] {
    action = [&] { cmd_family_sweep(rep, fam); };
  });

  std::vector<std::string> links;
  std::string batch;
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  auto* oracle = app.add_subcommand("oracle", "cross-check Goeritz, formula and cover determinants");
  oracle->add_option("links", links);
  oracle->add_option("--batch", batch, "file with one link expression per line");
  oracle->add_option("--random", random, "number of seeded random Montesinos links");
  oracle->add_option("--seed", seed, "seed for --random");
  oracle->callback([&] { action = [&] { cmd_oracle(rep, links, batch, random, seed); }; });

  CommandOutcome result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  try {
    action();
  } catch (const UsageError& e) {
    return {"", std::string("usage error: ") + e.what() + "\n", 2};
  } catch (const Indeterminate& e) {
    return {"", std::string("indeterminate: ") + e.what() + "\n", 3};
  } catch (const Error& e) {
    return {"", std::string("error: ") + e.what() + "\n", 2};
  }
  result.out = emit_report(rep, format == "tsv" ? Format::tsv : Format::json);
  result.exit_code = exit_code(rep.status);
  return result;
}

}  // namespace dehn
