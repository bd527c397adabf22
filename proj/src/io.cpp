#include "holofield/io.hpp"

#include <cstdio>

namespace holofield::io {

namespace {

void expect(bool ok, const std::string& what) { require(ok, ErrorKind::InvalidInput, what); }

const json& field_of(const json& j, const char* key) {
  expect(j.is_object() && j.contains(key), std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t index_from(const json& j) {
  expect(j.is_number_integer() && j.get<long long>() >= 0, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string approx_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  expect(j.is_string(), "expected a rational string");
  return parse_rational(j.get<std::string>());
}

json to_json(const Rational& q) { return to_string(q); }

NumberField field_from(const json& j) {
  if (j.is_null()) return NumberField::rationals();
  const json& mp = field_of(j, "minpoly");
  expect(mp.is_array() && mp.size() >= 2, "minpoly needs at least two coefficients");
  std::vector<Rational> c;
  for (const auto& x : mp) c.push_back(rational_from(x));
  const json& emb = field_of(j, "embedding");
  expect(emb.is_array() && emb.size() == 2, "embedding must be [lo, hi]");
  return NumberField::create(QPoly(std::move(c)), Interval(rational_from(emb[0]), rational_from(emb[1])));
}

json to_json(const NumberField& k) {
  json mp = json::array();
  for (const auto& c : k.minpoly().coeffs()) mp.push_back(to_json(c));
  return {{"minpoly", mp}, {"embedding", {to_json(k.embedding().lo), to_json(k.embedding().hi)}}};
}

json field_report(const NumberField& k) {
  json j = to_json(k);
  j["degree"] = k.degree();
  j["minpoly_string"] = to_string(k.minpoly());
  j["approx"] = approx_string(approx(NFElement::generator(k)));
  return j;
}

NFElement element_from(const json& j, const NumberField& k) {
  if (!j.is_array()) return NFElement(k, rational_from(j));
  expect(j.size() == static_cast<std::size_t>(k.degree()), "element has the wrong number of coordinates");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from(x));
  return NFElement(k, std::move(c));
}

json to_json(const NFElement& a) {
  json j = json::array();
  for (const auto& c : a.coords()) j.push_back(to_json(c));
  return j;
}

ComplexAlg complex_from(const json& j, const NumberField& k) {
  expect(j.is_array() && j.size() == 2, "complex value must be [re, im]");
  return ComplexAlg(element_from(j[0], k), element_from(j[1], k));
}

json to_json(const ComplexAlg& z) { return json::array({to_json(z.re()), to_json(z.im())}); }

IntMat int_matrix_from(const json& j) {
  expect(j.is_array() && !j.empty(), "matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].size();
  IntMat m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    expect(j[i].is_array() && j[i].size() == cols, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational q = rational_from(j[i][c]);
      expect(q.get_den() == 1, "matrix entries must be integers");
      m(i, c) = q.get_num();
    }
  }
  return m;
}

json to_json(const IntMat& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    j.push_back(row);
  }
  return j;
}

json to_json(const QMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    j.push_back(row);
  }
  return j;
}

json to_json(const KMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    j.push_back(row);
  }
  return j;
}

json to_json(const QPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return {{"coefficients", c}, {"string", to_string(p)}};
}

bool is_surface(const json& j) { return j.is_object() && (j.contains("polygons") || j.contains("squares")); }

PolygonSurface surface_from(const json& j) {
  expect(j.is_object(), "surface must be a JSON object");
  if (j.contains("squares")) {
    SquareTiled t{index_from(j.at("squares")), {}, {}};
    for (const auto& x : field_of(j, "h")) t.h.push_back(index_from(x));
    for (const auto& x : field_of(j, "v")) t.v.push_back(index_from(x));
    return square_tiled_to_polygon(t);
  }
  const NumberField k = field_from(j.value("field", json()));
  std::vector<Polygon> polys;
  for (const auto& p : field_of(j, "polygons")) {
    Polygon poly;
    for (const auto& v : p) poly.push_back(complex_from(v, k));
    polys.push_back(std::move(poly));
  }
  std::vector<Gluing> glue;
  for (const auto& g : field_of(j, "gluings")) {
    expect(g.is_array() && g.size() == 2 && g[0].size() == 2 && g[1].size() == 2, "gluing must be [[p,e],[p,e]]");
    glue.push_back({{index_from(g[0][0]), index_from(g[0][1])}, {index_from(g[1][0]), index_from(g[1][1])}});
  }
  return PolygonSurface(k, std::move(polys), std::move(glue));
}

json to_json(const PolygonSurface& s) {
  json polys = json::array();
  for (const auto& p : s.polygons()) {
    json poly = json::array();
    for (const auto& v : p) poly.push_back(to_json(v));
    polys.push_back(poly);
  }
  json glue = json::array();
  for (const auto& g : s.gluings()) glue.push_back({{g.a.polygon, g.a.edge}, {g.b.polygon, g.b.edge}});
  return {{"field", to_json(s.field())}, {"polygons", polys}, {"gluings", glue}};
}

SubspaceInput subspace_from(const json& j) {
  SubspaceInput out{field_from(j.value("field", json()))};
  out.complex = j.value("complex", false);
  const json& vecs = field_of(j, "vectors");
  expect(vecs.is_array() && !vecs.empty(), "subspace needs at least one vector");
  const std::size_t n = vecs[0].size();
  for (const auto& v : vecs) expect(v.is_array() && v.size() == n, "vectors have different lengths");
  if (out.complex) {
    std::vector<std::vector<ComplexAlg>> rows;
    for (const auto& v : vecs) {
      std::vector<ComplexAlg> row;
      for (const auto& x : v) row.push_back(complex_from(x, out.field));
      rows.push_back(std::move(row));
    }
    out.cplx = CSubspace::span(rows, n, ComplexAlg(out.field));
  } else {
    std::vector<std::vector<NFElement>> rows;
    for (const auto& v : vecs) {
      std::vector<NFElement> row;
      for (const auto& x : v) row.push_back(element_from(x, out.field));
      rows.push_back(std::move(row));
    }
    out.real = KSubspace::span(rows, n, NFElement(out.field));
  }
  return out;
}

RepresentationInput representation_from(const json& j) {
  const std::size_t dim = index_from(field_of(j, "dim"));
  std::vector<IntMat> gens;
  for (const auto& g : field_of(j, "generators")) gens.push_back(int_matrix_from(g));
  std::vector<std::string> labels = j.value("labels", std::vector<std::string>{});
  RepresentationInput out{Representation::make(dim, std::move(gens), std::move(labels)), {}, {}, {}};
  if (j.contains("pa")) {
    out.pa = int_matrix_from(j.at("pa"));
    expect(out.pa->rows() == dim && out.pa->cols() == dim, "pa has the wrong size");
  }
  if (j.contains("proj")) out.proj = int_matrix_from(j.at("proj"));
  if (j.contains("kernel_dim")) out.proj = kernel_first_projection(dim, index_from(j.at("kernel_dim")));
  if (j.contains("genus")) out.genus = static_cast<int>(index_from(j.at("genus")));
  return out;
}

PeriodsInput periods_from(const json& j) {
  PeriodsInput out{field_from(j.value("field", json()))};
  out.symbols = j.value("symbols", std::vector<std::string>{});
  for (const auto& e : field_of(j, "entries")) {
    ExtendedPeriod p{e.contains("alg") ? complex_from(e.at("alg"), out.field) : ComplexAlg(out.field), {}};
    if (e.contains("trans"))
      for (const auto& [name, c] : e.at("trans").items()) {
        expect(c.is_array() && c.size() == 2, "transcendental coefficient must be [re, im]");
        p.trans[name] = {rational_from(c[0]), rational_from(c[1])};
      }
    out.entries.push_back(std::move(p));
  }
  expect(!out.entries.empty(), "no period entries");
  return out;
}

AmbientModel ambient_from(const json& j) {
  AmbientModel m;
  m.n = index_from(field_of(j, "n"));
  m.genus = static_cast<int>(index_from(field_of(j, "genus")));
  m.k_m = field_from(j.value("kM", json()));
  m.label = j.value("label", std::string("M"));
  m.relations = KSubspace(m.n, NFElement(m.k_m));
  if (j.contains("relations") && !j.at("relations").is_null()) {
    json rel = j.at("relations");
    if (!rel.contains("field")) rel["field"] = j.value("kM", json());
    if (!rel.at("vectors").empty()) {
      const SubspaceInput s = subspace_from(rel);
      expect(!s.complex, "relations must be real");
      expect(s.field == m.k_m, "relations must be written over kM");
      expect(s.real.ambient_dim() == m.n, "relations have the wrong length");
      m.relations = s.real;
    }
  }
  return m;
}

Limits limits_from(const json& j) {
  Limits l;
  if (j.is_null()) return l;
  expect(j.is_object(), "config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    expect(value.is_number_integer(), "config value for " + key + " must be an integer");
    const int v = value.get<int>();
    if (key == "factor_degree_cap") {
      l.factor_degree_cap = v;
    } else if (key == "subfield_degree_cap") {
      l.subfield_degree_cap = v;
    } else if (key == "refinement_budget") {
      l.refinement_budget = v;
    } else if (key == "trace_stable_lengths") {
      l.trace_stable_lengths = v;
    } else if (key == "trace_max_length") {
      l.trace_max_length = v;
    } else if (key == "block_power_bound") {
      l.block_power_bound = v;
    } else if (key == "word_budget") {
      l.orbit_generators_cap = v;
    } else {
      expect(false, "unknown config key " + key);
    }
  }
  return l;
}

}  // namespace holofield::io
