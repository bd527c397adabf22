#include "holofield/holonomy.hpp"

namespace holofield {

namespace {

NFElement cross(const ComplexAlg& a, const ComplexAlg& b) { return a.re() * b.im() - a.im() * b.re(); }

}  // namespace

HolonomyReport holonomy_field(const PolygonSurface& s, std::optional<std::pair<std::size_t, std::size_t>> frame) {
  const SurfaceStructure st = validate(s);
  const HomologyData h = homology(s);
  const std::vector<ComplexAlg> abs = absolute_periods(s, h);
  require(!abs.empty(), ErrorKind::DegeneratePeriods, "surface has no absolute periods");

  std::size_t a = 0, b = 0;
  if (frame) {
    std::tie(a, b) = *frame;
    require(a < abs.size() && b < abs.size(), ErrorKind::InvalidInput, "frame index out of range");
    require(sign(cross(abs[a], abs[b])) != 0, ErrorKind::DegeneratePeriods, "frame periods are R-collinear");
  } else {
    bool found = false;
    for (std::size_t i = 0; i < abs.size() && !found; ++i)
      for (std::size_t j = i + 1; j < abs.size() && !found; ++j)
        if (sign(cross(abs[i], abs[j])) != 0) {
          a = i;
          b = j;
          found = true;
        }
    require(found, ErrorKind::DegeneratePeriods, "all absolute periods are R-collinear");
  }

  HolonomyReport r{rational_subfield(s.field())};
  r.frame_first = a;
  r.frame_second = b;
  r.genus = st.stratum.genus;
  r.e1 = abs[a];
  r.e2 = abs[b];
  NFElement det = cross(r.e1, r.e2);
  if (sign(det) < 0) {
    r.e2 = -r.e2;
    det = -det;
  }
  const NFElement inv = det.inverse();
  // inverse of [[e1.re, e2.re], [e1.im, e2.im]]
  r.normalizer = {r.e2.im() * inv, -(r.e2.re() * inv), -(r.e1.im() * inv), r.e1.re() * inv};

  std::vector<NFElement> gens;
  for (const auto& z : abs) {
    NFElement x = r.normalizer[0] * z.re() + r.normalizer[1] * z.im();
    NFElement y = r.normalizer[2] * z.re() + r.normalizer[3] * z.im();
    require(x * r.e1.re() + y * r.e2.re() == z.re() && x * r.e1.im() + y * r.e2.im() == z.im(),
            ErrorKind::VerificationFailed, "frame decomposition does not reproduce a period");
    gens.push_back(x);
    gens.push_back(y);
    r.coords.emplace_back(std::move(x), std::move(y));
  }
  r.field = field_generated_by(gens, s.field());
  return r;
}

FieldOfDefinition field_of_definition_subspace(const KSubspace& v) {
  const NumberField k = v.zero().field();
  std::vector<NFElement> gens;
  for (const auto& row : v.vectors())
    for (const auto& x : row)
      if (!x.is_rational()) gens.push_back(x);
  return {field_generated_by(gens, k), false};
}

FieldOfDefinition field_of_definition_subspace(const CSubspace& v) {
  const NumberField k = v.zero().field();
  std::vector<NFElement> gens;
  bool formal_i = false;
  for (const auto& row : v.vectors())
    for (const auto& z : row) {
      formal_i = formal_i || !z.im().is_zero();
      if (!z.re().is_rational()) gens.push_back(z.re());
      if (!z.im().is_rational()) gens.push_back(z.im());
    }
  return {field_generated_by(gens, k), formal_i};
}

KOfM k_of_M_from_samples(const std::vector<PolygonSurface>& samples) {
  require(!samples.empty(), ErrorKind::InvalidInput, "no sample surfaces");
  KOfM out{NumberField::rationals()};
  bool first = true;
  for (const auto& s : samples) {
    const HolonomyReport h = holonomy_field(s);
    if (first) {
      out.field = h.field.field;
      out.genus = h.genus;
      first = false;
    } else {
      if (h.genus != out.genus)
        out.warnings.push_back("samples have different genera (" + std::to_string(out.genus) + " and " +
                               std::to_string(h.genus) + ")");
      out.genus = std::min(out.genus, h.genus);
      out.field = field_intersect(out.field, h.field.field);
    }
  }
  if (out.field.degree() > out.genus)
    out.warnings.push_back("intersection has degree " + std::to_string(out.field.degree()) +
                           ", above the genus bound " + std::to_string(out.genus));
  return out;
}

PolygonSurface normalize_to_ki(const PolygonSurface& s) { return s.transformed(holonomy_field(s).normalizer); }

}  // namespace holofield
