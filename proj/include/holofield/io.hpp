#pragma once

#include "json.hpp"

#include "holofield/generic.hpp"
#include "holofield/limits.hpp"
#include "holofield/monodromy.hpp"
#include "holofield/surface.hpp"

namespace holofield::io {

using json = nlohmann::json;

// Rationals are strings "p/q" (plain integers accepted on input). Elements are
// arrays of power-basis coordinates, or a bare rational. Fields are
// {"minpoly": [c0, ..., cn] ascending, "embedding": [lo, hi]}; absent means Q.

Rational rational_from(const json& j);
json to_json(const Rational& q);

NumberField field_from(const json& j);
json to_json(const NumberField& k);
/// Field description for reports: minpoly string, coefficients, interval and
/// a labelled decimal approximation of the generator.
json field_report(const NumberField& k);

NFElement element_from(const json& j, const NumberField& k);
json to_json(const NFElement& a);
ComplexAlg complex_from(const json& j, const NumberField& k);
json to_json(const ComplexAlg& z);

IntMat int_matrix_from(const json& j);
json to_json(const IntMat& m);
json to_json(const QMatrix& m);
json to_json(const KMatrix& m);
json to_json(const QPoly& p);

/// Either a polygon surface or a square-tiled {"squares", "h", "v"} description.
PolygonSurface surface_from(const json& j);
json to_json(const PolygonSurface& s);
bool is_surface(const json& j);

struct SubspaceInput {
  NumberField field;
  bool complex = false;
  KSubspace real{0, NFElement()};
  CSubspace cplx{0, ComplexAlg()};
};
SubspaceInput subspace_from(const json& j);

struct RepresentationInput {
  Representation rep;
  std::optional<IntMat> pa;
  std::optional<IntMat> proj;
  std::optional<int> genus;
};
RepresentationInput representation_from(const json& j);

struct PeriodsInput {
  NumberField field;
  std::vector<std::string> symbols{};
  std::vector<ExtendedPeriod> entries{};
};
PeriodsInput periods_from(const json& j);
AmbientModel ambient_from(const json& j);

Limits limits_from(const json& j);

}  // namespace holofield::io
