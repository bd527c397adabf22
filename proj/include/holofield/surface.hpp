#pragma once

#include <array>
#include <string>
#include <vector>

#include "holofield/intmat.hpp"
#include "holofield/number_field.hpp"

namespace holofield {

struct EdgeRef {
  std::size_t polygon = 0;
  std::size_t edge = 0;  // from vertex `edge` to vertex `edge + 1`
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct Gluing {
  EdgeRef a;
  EdgeRef b;
};

using Polygon = std::vector<ComplexAlg>;

/// Polygons with vertices in K[i], glued edge to edge by translations.
class PolygonSurface {
 public:
  PolygonSurface(NumberField field, std::vector<Polygon> polygons, std::vector<Gluing> gluings);

  const NumberField& field() const { return field_; }
  const std::vector<Polygon>& polygons() const { return polygons_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }

  ComplexAlg edge_vector(const EdgeRef& e) const;
  /// Apply the real linear map (x, y) -> (m00 x + m01 y, m10 x + m11 y) to every vertex.
  PolygonSurface transformed(const std::array<NFElement, 4>& m) const;

 private:
  NumberField field_;
  std::vector<Polygon> polygons_;
  std::vector<Gluing> gluings_;
};

struct SquareTiled {
  std::size_t squares = 0;
  std::vector<std::size_t> h;  // one-line notation, 1-based
  std::vector<std::size_t> v;
};

struct Stratum {
  int genus = 0;
  std::vector<int> zero_orders;  // positive, decreasing
  int marked_points = 0;         // vertex classes of cone angle 2*pi

  std::string name() const;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct VertexClass {
  std::vector<std::pair<std::size_t, std::size_t>> corners;  // (polygon, vertex)
  int cone_angle = 0;                                        // in multiples of 2*pi
};

struct SurfaceStructure {
  Stratum stratum;
  std::vector<VertexClass> vertices;
  std::vector<std::vector<std::size_t>> vertex_of;  // [polygon][vertex] -> class
  std::size_t edge_pairs = 0;
  std::size_t faces = 0;
};

/// Checks every structural invariant and computes vertex classes, cone
/// angles and the stratum. Errors: NonPolygon, BadGluing, Disconnected.
SurfaceStructure validate(const PolygonSurface& s);

PolygonSurface square_tiled_to_polygon(const SquareTiled& t);

/// An oriented 1-cell of the glued complex: the representative polygon edge.
struct CellEdge {
  EdgeRef rep;
  EdgeRef partner;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct HomologyData {
  int genus = 0;
  std::size_t singularities = 0;             // s, including marked points
  std::vector<CellEdge> edges;
  std::vector<std::vector<Integer>> rel_basis;  // edge chains spanning H1(X, Sigma; Z)
  std::vector<std::vector<Integer>> abs_basis;  // edge chains spanning H1(X; Z)
  IntMat rel_coordinates;  // rows give the rel-basis coordinates of an edge chain
  IntMat proj;             // 2g x n: relative cohomology -> absolute cohomology
  QSubspace ker_p{0, Rational(0)};

  std::size_t rel_rank() const { return rel_basis.size(); }
  std::size_t abs_rank() const { return abs_basis.size(); }
  /// Coordinates of an edge chain in the relative basis.
  std::vector<Integer> rel_coords(const std::vector<Integer>& chain) const;
};

HomologyData homology(const PolygonSurface& s);

/// Integrals of the form over the relative basis: exact chain sums.
std::vector<ComplexAlg> periods(const PolygonSurface& s, const HomologyData& h);
std::vector<ComplexAlg> absolute_periods(const PolygonSurface& s, const HomologyData& h);
ComplexAlg chain_period(const PolygonSurface& s, const HomologyData& h, const std::vector<Integer>& chain);

}  // namespace holofield
