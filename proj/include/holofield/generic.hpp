#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holofield/fields.hpp"
#include "holofield/limits.hpp"

namespace holofield {

/// alg + sum over symbols of (re + i im) * tau, the taus algebraically independent.
struct ExtendedPeriod {
  ComplexAlg alg;
  std::map<std::string, std::pair<Rational, Rational>> trans;
};

struct AmbientModel {
  std::size_t n = 0;
  NumberField k_m;
  KSubspace relations{0, NFElement()};  // over k_m, ambient dimension n
  int genus = 0;
  std::string label = "M";

  /// The whole stratum chart: no relations, k(M) = Q.
  static AmbientModel stratum(std::size_t n, int genus, std::string label = "H");
};

/// All c in k^n with sum c_j z_j = 0, as a subspace over k's own field.
/// Errors: FieldMismatch, InvalidInput (undeclared symbol).
KSubspace relation_space_over(const std::vector<ExtendedPeriod>& z, const Subfield& k,
                              const std::vector<std::string>& symbols);

/// Field generated by the real and imaginary parts of the algebraic parts,
/// used as the holonomy field when no surface is given.
Subfield chart_holonomy_field(const std::vector<ExtendedPeriod>& z, const NumberField& field);

struct Witness {
  Subfield k;
  std::vector<NFElement> relation;  // coefficients in k's own field
};

struct Verdict {
  bool typical = true;
  std::optional<Witness> witness{};
  std::vector<int> checked_degrees{};  // degrees of the subfields examined, in order
  std::vector<std::string> warnings{};
};

/// hol is the holonomy field as a subfield of the periods' field.
/// Errors: DegreeLimitExceeded, FieldMismatch.
Verdict is_typical(const std::vector<ExtendedPeriod>& z, const std::vector<std::string>& symbols,
                   const AmbientModel& m, const Subfield& hol, const Limits& limits = {});
Verdict is_typical(const std::vector<ExtendedPeriod>& z, const std::vector<std::string>& symbols,
                   const AmbientModel& m, const Limits& limits = {});

struct GenericReport {
  std::string status;  // "generic" or "inconclusive"
  std::string claim;
};

GenericReport generic_verdict(const Verdict& v, const AmbientModel& m);

/// sum c_j z_j, with c embedded into the periods' field.
struct Substituted {
  ComplexAlg alg;
  std::map<std::string, ComplexAlg> trans;
  bool is_zero() const;
};

Substituted substitute(const std::vector<ExtendedPeriod>& z, const std::vector<NFElement>& c, const Subfield& k);

}  // namespace holofield
