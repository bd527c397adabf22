#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holofield/fields.hpp"
#include "holofield/surface.hpp"

namespace holofield {

struct HolonomyReport {
  Subfield field;  // inside the surface's declared field
  std::size_t frame_first = 0;
  std::size_t frame_second = 0;
  ComplexAlg e1{};
  ComplexAlg e2{};
  std::vector<std::pair<NFElement, NFElement>> coords{};  // absolute basis period = x e1 + y e2
  std::array<NFElement, 4> normalizer{};                 // row-major; sends e1 -> 1, e2 -> i
  int genus = 0;
};

/// frame overrides the scan for the first two R-independent absolute periods.
/// If the frame is negatively oriented, e2 is negated.
HolonomyReport holonomy_field(const PolygonSurface& s,
                              std::optional<std::pair<std::size_t, std::size_t>> frame = std::nullopt);

struct FieldOfDefinition {
  Subfield field;
  bool formal_i = false;  // some RREF entry has a nonzero imaginary part
};

FieldOfDefinition field_of_definition_subspace(const KSubspace& v);
FieldOfDefinition field_of_definition_subspace(const CSubspace& v);

struct KOfM {
  NumberField field;
  int genus = 0;
  std::vector<std::string> warnings{};
};

KOfM k_of_M_from_samples(const std::vector<PolygonSurface>& samples);

PolygonSurface normalize_to_ki(const PolygonSurface& s);

}  // namespace holofield
