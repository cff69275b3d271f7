#pragma once

#include "dehn/integer.hpp"
#include "dehn/manifold.hpp"
#include "dehn/slope.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dehn {

/// Parameter values in the order of FamilySpec::params.
using ParamValues = std::vector<Integer>;

struct ParamSpec {
  std::string name;
};

enum class ClaimKind { exact, orders_only, tag };

std::string to_string(ClaimKind k);

struct FillingClaim {
  Slope slope;
  ClaimKind kind;
  std::string formula;  // human-readable form of the claimed result
  std::function<Manifold(const ParamValues&)> evaluate;
};

enum class CheckKind { distance, finite_type, reducible, distinctness, wellformed, homeomorphic_to };

struct CheckSpec {
  CheckKind kind = CheckKind::wellformed;
  Slope a = Slope::infinity();
  Slope b = Slope::infinity();
  Integer expected_distance = 0;
  FiniteType expected_type = FiniteType::unknown;
  // homeomorphic_to: compare the filling at `a` with another family's filling.
  std::string other_family;
  ParamValues other_params;
  // Restricts the check to some parameter points; empty means everywhere.
  std::function<bool(const ParamValues&)> applies;
  std::string applies_text;
};

/// A (reducible, finite) slope pair that a family is built to exhibit.
struct DesignatedPair {
  Slope reducible;
  Slope finite;
};

/// Metadata edge between an auxiliary family and the family it fills into.
struct GluingEdge {
  std::string relation;
  std::string target;
};

struct FamilySpec {
  std::string name;
  std::string summary;
  std::vector<ParamSpec> params;
  std::string domain_text;
  std::function<bool(const ParamValues&)> domain;
  std::vector<FillingClaim> claims;
  std::vector<CheckSpec> checks;
  std::vector<DesignatedPair> designated;
  std::vector<GluingEdge> edges;

  bool in_domain(const ParamValues& v) const { return v.size() == params.size() && domain(v); }
  const FillingClaim* find_claim(const Slope& r) const;
};

const std::vector<FamilySpec>& family_catalog();

/// Throws InvalidArgument for an unknown name.
const FamilySpec& find_family(std::string_view name);

/// Throws DomainError if the parameters are outside the domain or the slope is unlisted.
Manifold evaluate_filling(const FamilySpec& family, const ParamValues& params, const Slope& slope);

enum class CheckStatus { pass, fail, indeterminate };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string witness;
};

struct VerificationReport {
  std::string family;
  ParamValues params;
  std::vector<std::pair<Slope, Manifold>> fillings;
  std::vector<CheckResult> checks;

  CheckStatus overall() const;
};

std::string describe(const CheckSpec& c);

/// Throws DomainError for out-of-domain parameters.
VerificationReport verify_family(const FamilySpec& family, const ParamValues& params);

struct ParamRange {
  Integer lo, hi;
};

struct SweepReport {
  std::string family;
  std::vector<ParamRange> ranges;
  std::vector<VerificationReport> points;  // in lexicographic parameter order
  std::size_t skipped = 0;                 // grid points outside the domain

  std::size_t count(CheckStatus s) const;
};

/// Verifies every in-domain grid point. Work is spread over threads, capped by
/// DEHNCALC_THREADS when set; the result does not depend on scheduling.
SweepReport sweep_verify(const FamilySpec& family, const std::vector<ParamRange>& ranges);

}  // namespace dehn
