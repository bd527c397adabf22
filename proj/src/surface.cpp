#include "holofield/surface.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace holofield {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

NFElement cross(const ComplexAlg& a, const ComplexAlg& b) { return a.re() * b.im() - a.im() * b.re(); }
NFElement dot(const ComplexAlg& a, const ComplexAlg& b) { return a.re() * b.re() + a.im() * b.im(); }

int orient(const ComplexAlg& a, const ComplexAlg& b, const ComplexAlg& c) { return sign(cross(b - a, c - a)); }

// c lies on the closed segment [a, b], given the three points are collinear.
bool on_segment(const ComplexAlg& a, const ComplexAlg& b, const ComplexAlg& c) {
  return sign(dot(c - a, c - b)) <= 0;
}

bool segments_meet(const ComplexAlg& p1, const ComplexAlg& p2, const ComplexAlg& q1, const ComplexAlg& q2) {
  const int d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

void check_polygon(const Polygon& poly, std::size_t index) {
  const std::size_t n = poly.size();
  const std::string name = "polygon " + std::to_string(index);
  require(n >= 3, ErrorKind::NonPolygon, name + " has fewer than three vertices");
  for (std::size_t i = 0; i < n; ++i)
    require(!(poly[i] == poly[(i + 1) % n]), ErrorKind::NonPolygon, name + " has a zero-length edge");
  NFElement area2(poly[0].field());
  for (std::size_t i = 0; i < n; ++i) area2 += cross(poly[i], poly[(i + 1) % n]);
  require(sign(area2) > 0, ErrorKind::NonPolygon, name + " is not positively oriented");
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexAlg& a = poly[i];
    const ComplexAlg& b = poly[(i + 1) % n];
    // consecutive edges may not fold back onto each other
    const ComplexAlg& c = poly[(i + 2) % n];
    require(!(orient(a, b, c) == 0 && sign(dot(a - b, c - b)) > 0), ErrorKind::NonPolygon,
            name + " has overlapping consecutive edges");
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      require(!segments_meet(a, b, poly[j], poly[(j + 1) % n]), ErrorKind::NonPolygon, name + " is not simple");
    }
  }
}

// Pseudo-angle order on nonzero directions with the positive x-axis first.
int half_plane(const ComplexAlg& v) {
  const int sy = sign(v.im());
  if (sy > 0 || (sy == 0 && sign(v.re()) > 0)) return 0;
  return 1;
}

bool angle_less(const ComplexAlg& a, const ComplexAlg& b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sign(cross(a, b)) > 0;
}

// Does the counter-clockwise arc (u, w] contain the positive x-axis?
int crosses_axis(const ComplexAlg& u, const ComplexAlg& w) { return angle_less(w, u) ? 1 : 0; }

}  // namespace

PolygonSurface::PolygonSurface(NumberField field, std::vector<Polygon> polygons, std::vector<Gluing> gluings)
    : field_(std::move(field)), polygons_(std::move(polygons)), gluings_(std::move(gluings)) {
  for (const auto& poly : polygons_)
    for (const auto& z : poly)
      require(z.field() == field_, ErrorKind::FieldMismatch, "vertex coordinates outside the declared field");
}

ComplexAlg PolygonSurface::edge_vector(const EdgeRef& e) const {
  require(e.polygon < polygons_.size() && e.edge < polygons_[e.polygon].size(), ErrorKind::BadGluing,
          "edge reference out of range");
  const Polygon& p = polygons_[e.polygon];
  return p[(e.edge + 1) % p.size()] - p[e.edge];
}

PolygonSurface PolygonSurface::transformed(const std::array<NFElement, 4>& m) const {
  std::vector<Polygon> out;
  for (const auto& poly : polygons_) {
    Polygon q;
    for (const auto& z : poly) q.emplace_back(m[0] * z.re() + m[1] * z.im(), m[2] * z.re() + m[3] * z.im());
    out.push_back(std::move(q));
  }
  return PolygonSurface(field_, std::move(out), gluings_);
}

std::string Stratum::name() const {
  std::vector<int> parts = zero_orders;
  for (int i = 0; i < marked_points; ++i) parts.push_back(0);
  std::ostringstream os;
  os << "H(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

namespace {

std::vector<std::vector<EdgeRef>> partner_table(const PolygonSurface& s) {
  const auto& polys = s.polygons();
  std::vector<std::vector<EdgeRef>> partner(polys.size());
  std::vector<std::vector<bool>> seen(polys.size());
  for (std::size_t p = 0; p < polys.size(); ++p) {
    partner[p].resize(polys[p].size());
    seen[p].assign(polys[p].size(), false);
  }
  for (const auto& g : s.gluings()) {
    for (const EdgeRef& e : {g.a, g.b}) {
      require(e.polygon < polys.size() && e.edge < polys[e.polygon].size(), ErrorKind::BadGluing,
              "gluing refers to a missing edge");
      require(!seen[e.polygon][e.edge], ErrorKind::BadGluing,
              "edge " + std::to_string(e.edge) + " of polygon " + std::to_string(e.polygon) + " is glued twice");
      seen[e.polygon][e.edge] = true;
    }
    require(!(g.a == g.b), ErrorKind::BadGluing, "edge glued to itself");
    require(s.edge_vector(g.a) + s.edge_vector(g.b) == ComplexAlg(s.field()), ErrorKind::BadGluing,
            "glued edges (" + std::to_string(g.a.polygon) + "," + std::to_string(g.a.edge) + ") and (" +
                std::to_string(g.b.polygon) + "," + std::to_string(g.b.edge) + ") are not translates");
    partner[g.a.polygon][g.a.edge] = g.b;
    partner[g.b.polygon][g.b.edge] = g.a;
  }
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t e = 0; e < polys[p].size(); ++e)
      require(seen[p][e], ErrorKind::BadGluing,
              "edge " + std::to_string(e) + " of polygon " + std::to_string(p) + " is not glued");
  return partner;
}

}  // namespace

SurfaceStructure validate(const PolygonSurface& s) {
  const auto& polys = s.polygons();
  require(!polys.empty(), ErrorKind::NonPolygon, "surface has no polygons");
  for (std::size_t p = 0; p < polys.size(); ++p) check_polygon(polys[p], p);
  const auto partner = partner_table(s);

  UnionFind faces(polys.size());
  for (const auto& g : s.gluings()) faces.join(g.a.polygon, g.b.polygon);
  for (std::size_t p = 0; p < polys.size(); ++p)
    require(faces.find(p) == 0, ErrorKind::Disconnected, "polygon " + std::to_string(p) + " is not connected to polygon 0");

  std::vector<std::size_t> offset(polys.size() + 1, 0);
  for (std::size_t p = 0; p < polys.size(); ++p) offset[p + 1] = offset[p] + polys[p].size();
  UnionFind corners(offset.back());
  for (std::size_t p = 0; p < polys.size(); ++p) {
    const std::size_t n = polys[p].size();
    for (std::size_t e = 0; e < n; ++e) {
      const EdgeRef q = partner[p][e];
      const std::size_t m = polys[q.polygon].size();
      corners.join(offset[p] + e, offset[q.polygon] + (q.edge + 1) % m);
      corners.join(offset[p] + (e + 1) % n, offset[q.polygon] + q.edge);
    }
  }

  SurfaceStructure out;
  out.faces = polys.size();
  out.edge_pairs = offset.back() / 2;
  out.vertex_of.resize(polys.size());
  std::vector<std::size_t> class_of_root(offset.back(), SIZE_MAX);
  for (std::size_t p = 0; p < polys.size(); ++p) {
    const std::size_t n = polys[p].size();
    out.vertex_of[p].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t root = corners.find(offset[p] + i);
      if (class_of_root[root] == SIZE_MAX) {
        class_of_root[root] = out.vertices.size();
        out.vertices.emplace_back();
      }
      VertexClass& vc = out.vertices[class_of_root[root]];
      vc.corners.emplace_back(p, i);
      out.vertex_of[p][i] = class_of_root[root];
      const ComplexAlg u = polys[p][(i + 1) % n] - polys[p][i];
      const ComplexAlg w = polys[p][(i + n - 1) % n] - polys[p][i];
      vc.cone_angle += crosses_axis(u, w);
    }
  }

  const long chi = static_cast<long>(out.vertices.size()) - static_cast<long>(out.edge_pairs) +
                   static_cast<long>(out.faces);
  require(chi % 2 == 0 && chi <= 2, ErrorKind::VerificationFailed, "odd Euler characteristic");
  out.stratum.genus = static_cast<int>((2 - chi) / 2);
  int total = 0;
  for (const auto& v : out.vertices) {
    require(v.cone_angle >= 1, ErrorKind::VerificationFailed, "vertex with zero cone angle");
    if (v.cone_angle == 1) {
      ++out.stratum.marked_points;
    } else {
      out.stratum.zero_orders.push_back(v.cone_angle - 1);
    }
    total += v.cone_angle - 1;
  }
  std::sort(out.stratum.zero_orders.rbegin(), out.stratum.zero_orders.rend());
  require(total == 2 * out.stratum.genus - 2, ErrorKind::VerificationFailed,
          "cone angles disagree with the Euler characteristic");
  return out;
}

PolygonSurface square_tiled_to_polygon(const SquareTiled& t) {
  const std::size_t n = t.squares;
  require(n >= 1, ErrorKind::InvalidInput, "square-tiled surface needs at least one square");
  for (const auto* perm : {&t.h, &t.v}) {
    require(perm->size() == n, ErrorKind::InvalidInput, "permutation length differs from the square count");
    std::vector<bool> hit(n, false);
    for (std::size_t x : *perm) {
      require(x >= 1 && x <= n && !hit[x - 1], ErrorKind::InvalidInput, "not a permutation of 1..n");
      hit[x - 1] = true;
    }
  }
  UnionFind orbit(n);
  for (std::size_t i = 0; i < n; ++i) {
    orbit.join(i, t.h[i] - 1);
    orbit.join(i, t.v[i] - 1);
  }
  for (std::size_t i = 0; i < n; ++i)
    require(orbit.find(i) == 0, ErrorKind::Intransitive, "permutations do not act transitively");

  const NumberField q;
  auto pt = [&](long x, long y) { return ComplexAlg(NFElement(q, Rational(x)), NFElement(q, Rational(y))); };
  std::vector<Polygon> squares(n, Polygon{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  std::vector<Gluing> gluings;
  for (std::size_t i = 0; i < n; ++i) {
    gluings.push_back({{i, 1}, {t.h[i] - 1, 3}});
    gluings.push_back({{i, 2}, {t.v[i] - 1, 0}});
  }
  return PolygonSurface(q, std::move(squares), std::move(gluings));
}

std::vector<Integer> HomologyData::rel_coords(const std::vector<Integer>& chain) const {
  std::vector<Integer> out(rel_coordinates.rows());
  for (std::size_t i = 0; i < rel_coordinates.rows(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j) out[i] += rel_coordinates(i, j) * chain[j];
  return out;
}

namespace {

// Columns first..end of an integer matrix as vectors.
std::vector<std::vector<Integer>> columns_from(const IntMat& m, std::size_t first) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = first; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

std::size_t diagonal_rank(const IntMat& s) {
  std::size_t r = 0;
  while (r < std::min(s.rows(), s.cols()) && s(r, r) != 0) {
    require(s(r, r) == 1, ErrorKind::VerificationFailed, "torsion in surface homology");
    ++r;
  }
  return r;
}

}  // namespace

HomologyData homology(const PolygonSurface& s) {
  const SurfaceStructure st = validate(s);
  const auto partner = partner_table(s);
  const auto& polys = s.polygons();

  HomologyData h;
  h.genus = st.stratum.genus;
  h.singularities = st.vertices.size();

  std::vector<std::vector<std::size_t>> edge_index(polys.size());
  std::vector<std::vector<int>> edge_sign(polys.size());
  for (std::size_t p = 0; p < polys.size(); ++p) {
    edge_index[p].assign(polys[p].size(), SIZE_MAX);
    edge_sign[p].assign(polys[p].size(), 0);
  }
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (std::size_t e = 0; e < polys[p].size(); ++e) {
      if (edge_index[p][e] != SIZE_MAX) continue;
      const EdgeRef rep{p, e}, other = partner[p][e];
      const std::size_t n = polys[p].size();
      edge_index[p][e] = h.edges.size();
      edge_sign[p][e] = 1;
      edge_index[other.polygon][other.edge] = h.edges.size();
      edge_sign[other.polygon][other.edge] = -1;
      h.edges.push_back({rep, other, st.vertex_of[p][e], st.vertex_of[p][(e + 1) % n]});
    }
  const std::size_t ne = h.edges.size(), nv = st.vertices.size(), nf = polys.size();

  IntMat d2(ne, nf);
  for (std::size_t p = 0; p < nf; ++p)
    for (std::size_t e = 0; e < polys[p].size(); ++e) d2(edge_index[p][e], p) += edge_sign[p][e];

  // relative homology: Z^E modulo the face boundaries
  const SmithForm rel = smith_normal_form(d2);
  const std::size_t r = diagonal_rank(rel.s);
  const auto u_inv = inverse_int(rel.u);
  require(u_inv.has_value(), ErrorKind::VerificationFailed, "Smith transform not unimodular");
  h.rel_basis = columns_from(*u_inv, r);
  h.rel_coordinates = IntMat(ne - r, ne);
  for (std::size_t i = r; i < ne; ++i)
    for (std::size_t j = 0; j < ne; ++j) h.rel_coordinates(i - r, j) = rel.u(i, j);

  // spanning tree of the 1-skeleton by breadth-first search in index order
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < ne; ++e) {
    adj[h.edges[e].from].emplace_back(e, h.edges[e].to);
    adj[h.edges[e].to].emplace_back(e, h.edges[e].from);
  }
  std::vector<bool> in_tree(ne, false), reached(nv, false);
  std::vector<std::size_t> parent_edge(nv, SIZE_MAX);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  reached[0] = true;
  while (!bfs.empty()) {
    const std::size_t x = bfs.front();
    bfs.pop();
    for (auto [e, y] : adj[x]) {
      if (reached[y]) continue;
      reached[y] = true;
      in_tree[e] = true;
      parent_edge[y] = e;
      bfs.push(y);
    }
  }
  // chain of the tree path from the root to vertex x
  auto root_path = [&](std::size_t x) {
    std::vector<Integer> chain(ne);
    while (x != 0) {
      const std::size_t e = parent_edge[x];
      if (h.edges[e].to == x) {
        chain[e] += 1;
        x = h.edges[e].from;
      } else {
        chain[e] -= 1;
        x = h.edges[e].to;
      }
    }
    return chain;
  };
  std::vector<std::size_t> non_tree;
  std::vector<std::vector<Integer>> cycles;
  for (std::size_t e = 0; e < ne; ++e) {
    if (in_tree[e]) continue;
    non_tree.push_back(e);
    std::vector<Integer> c = root_path(h.edges[e].from);
    const std::vector<Integer> back = root_path(h.edges[e].to);
    for (std::size_t i = 0; i < ne; ++i) c[i] -= back[i];
    c[e] += 1;
    cycles.push_back(std::move(c));
  }
  IntMat b(non_tree.size(), nf);
  for (std::size_t i = 0; i < non_tree.size(); ++i)
    for (std::size_t p = 0; p < nf; ++p) b(i, p) = d2(non_tree[i], p);
  const SmithForm abs = smith_normal_form(b);
  const std::size_t ra = diagonal_rank(abs.s);
  const auto ua_inv = inverse_int(abs.u);
  require(ua_inv.has_value(), ErrorKind::VerificationFailed, "Smith transform not unimodular");
  for (const auto& coeffs : columns_from(*ua_inv, ra)) {
    std::vector<Integer> chain(ne);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      for (std::size_t i = 0; i < ne; ++i) chain[i] += coeffs[j] * cycles[j][i];
    h.abs_basis.push_back(std::move(chain));
  }

  const std::size_t n = h.rel_basis.size(), g2 = h.abs_basis.size();
  require(g2 == static_cast<std::size_t>(2 * h.genus) && n == g2 + h.singularities - 1,
          ErrorKind::VerificationFailed, "homology ranks disagree with the stratum");
  h.proj = IntMat(g2, n);
  for (std::size_t j = 0; j < g2; ++j) {
    const auto c = h.rel_coords(h.abs_basis[j]);
    for (std::size_t i = 0; i < n; ++i) h.proj(j, i) = c[i];
  }
  h.ker_p = kernel(to_rational(h.proj));
  return h;
}

ComplexAlg chain_period(const PolygonSurface& s, const HomologyData& h, const std::vector<Integer>& chain) {
  ComplexAlg z(s.field());
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e] == 0) continue;
    const NFElement c(s.field(), Rational(chain[e]));
    z += c * s.edge_vector(h.edges[e].rep);
  }
  return z;
}

std::vector<ComplexAlg> periods(const PolygonSurface& s, const HomologyData& h) {
  std::vector<ComplexAlg> out;
  for (const auto& c : h.rel_basis) out.push_back(chain_period(s, h, c));
  return out;
}

std::vector<ComplexAlg> absolute_periods(const PolygonSurface& s, const HomologyData& h) {
  std::vector<ComplexAlg> out;
  for (const auto& c : h.abs_basis) out.push_back(chain_period(s, h, c));
  return out;
}

}  // namespace holofield
