#include "holofield/reports.hpp"

#include "holofield/holonomy.hpp"

namespace holofield::reports {

namespace {

using io::to_json;

json cite(const std::string& claim, const std::string& anchor) { return {{"claim", claim}, {"anchor", anchor}}; }

const char* kHolonomyAnchor = "holonomy field: smallest k with absolute periods in k e1 + k e2, independent of the frame";
const char* kRrefAnchor = "field of definition: generated by the coefficients of the reduced row echelon form";
const char* kIntersectionAnchor = "k(M) is the intersection of the holonomy fields of the surfaces in M";
const char* kDegreeAnchor = "k(M) is a real number field of degree at most the genus";
const char* kRationalAnchor = "absolute periods in Q[i] give k(M) = Q";
const char* kPerronAnchor = "pseudo-Anosov action: the stretch factors are simple eigenvalues";
const char* kDecompositionAnchor = "H^1 splits as the sum of the Galois conjugates V_rho plus W, both defined over Q";
const char* kTraceAnchor = "the trace field of V equals k(M)";
const char* kProjectionAnchor = "projection onto ker g(A) is a polynomial in A with coefficients in k";
const char* kInequalityAnchor = "dim p(T(M)) * deg k(M) <= 2g";
const char* kBlockAnchor = "after a power, the relative action has the form (Id *; 0 A)";
const char* kTypicalAnchor = "typical periods imply genericity; special periods do not imply non-genericity";

void check(bool ok, const std::string& what) { require(ok, ErrorKind::VerificationFailed, what); }

json subfield_json(const Subfield& k) {
  json j = io::field_report(k.field);
  json gen = to_json(k.embedding(NFElement::generator(k.field)));
  j["generator_in_ambient"] = gen;
  return j;
}

json ksubspace_json(const KSubspace& s) {
  json rows = json::array();
  for (const auto& v : s.vectors()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return {{"dim", s.dim()}, {"rref", rows}};
}

json qsubspace_json(const QSubspace& s) {
  json rows = json::array();
  for (const auto& v : s.vectors()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    rows.push_back(row);
  }
  return {{"dim", s.dim()}, {"rref", rows}};
}

bool in_subfield_of_k(const KMatrix& m, const Subfield& k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_member(m(i, j), k)) return false;
  return true;
}

}  // namespace

json surface_info(const json& surface, const Options&) {
  const PolygonSurface s = io::surface_from(surface);
  const SurfaceStructure st = validate(s);
  const HomologyData h = homology(s);
  json sing = json::array();
  for (const auto& v : st.vertices) sing.push_back({{"cone_angle", v.cone_angle}, {"order", v.cone_angle - 1}});
  json per = json::array();
  for (const auto& z : periods(s, h)) per.push_back(to_json(z));
  json result = {{"stratum", st.stratum.name()},
                 {"genus", st.stratum.genus},
                 {"singularities", sing},
                 {"polygons", s.polygons().size()},
                 {"edge_pairs", st.edge_pairs},
                 {"rel_rank", h.rel_rank()},
                 {"abs_rank", h.abs_rank()},
                 {"ker_p_dim", h.ker_p.dim()},
                 {"field", io::field_report(s.field())},
                 {"periods", per},
                 {"surface", to_json(s)}};
  return {{"result", result},
          {"citations", json::array({cite("stratum", "zero orders form a partition of 2g - 2"),
                                     cite("periods", "period coordinates: integrals over a relative homology basis")})}};
}

json holonomy(const json& surface, const Options& opt) {
  const PolygonSurface s = io::surface_from(surface);
  const HolonomyReport r = holonomy_field(s);
  if (opt.verify) {
    const auto& a = r.normalizer;
    check(a[0] * r.e1.re() + a[1] * r.e1.im() == NFElement(s.field(), Rational(1)) &&
              (a[2] * r.e1.re() + a[3] * r.e1.im()).is_zero() && (a[0] * r.e2.re() + a[1] * r.e2.im()).is_zero() &&
              a[2] * r.e2.re() + a[3] * r.e2.im() == NFElement(s.field(), Rational(1)),
          "normalizer does not send the frame to 1, i");
    for (const auto& [x, y] : r.coords) check(is_member(x, r.field) && is_member(y, r.field), "coordinate outside field");
    const auto n = normalize_to_ki(s);
    for (const auto& z : absolute_periods(n, homology(n)))
      check(is_member(z.re(), r.field) && is_member(z.im(), r.field), "normalized period outside k[i]");
  }
  json coords = json::array();
  for (const auto& [x, y] : r.coords) coords.push_back(json::array({to_json(x), to_json(y)}));
  json norm = json::array();
  for (const auto& x : r.normalizer) norm.push_back(to_json(x));
  json result = {{"field", subfield_json(r.field)},
                 {"minpoly", to_string(r.field.field.minpoly())},
                 {"degree", r.field.degree()},
                 {"genus", r.genus},
                 {"frame", {r.frame_first, r.frame_second}},
                 {"e1", to_json(r.e1)},
                 {"e2", to_json(r.e2)},
                 {"coords", coords},
                 {"normalizer", norm},
                 {"surface_field", io::field_report(s.field())}};
  json cites = json::array({cite("field", kHolonomyAnchor)});
  if (r.field.degree() == 1) cites.push_back(cite("field", kRationalAnchor));
  return {{"result", result}, {"citations", cites}};
}

json fod(const json& subspace, const Options& opt) {
  const io::SubspaceInput in = io::subspace_from(subspace);
  const FieldOfDefinition f = in.complex ? field_of_definition_subspace(in.cplx) : field_of_definition_subspace(in.real);
  json rref = json::array();
  if (in.complex) {
    for (const auto& v : in.cplx.vectors()) {
      json row = json::array();
      for (const auto& z : v) row.push_back(to_json(z));
      rref.push_back(row);
    }
    if (opt.verify)
      for (const auto& v : in.cplx.vectors())
        for (const auto& z : v) check(is_member(z.re(), f.field) && is_member(z.im(), f.field), "RREF entry outside field");
  } else {
    rref = ksubspace_json(in.real)["rref"];
    if (opt.verify)
      for (const auto& v : in.real.vectors())
        for (const auto& x : v) check(is_member(x, f.field), "RREF entry outside field");
  }
  json result = {{"field", subfield_json(f.field)},
                 {"minpoly", to_string(f.field.field.minpoly())},
                 {"degree", f.field.degree()},
                 {"formal_i", f.formal_i},
                 {"dim", in.complex ? in.cplx.dim() : in.real.dim()},
                 {"rref", rref}};
  return {{"result", result}, {"citations", json::array({cite("field", kRrefAnchor)})}};
}

json intersect_fields(const std::vector<json>& fields, const Options& opt) {
  require(!fields.empty(), ErrorKind::InvalidInput, "no fields given");
  std::vector<NumberField> ks;
  for (const auto& f : fields) ks.push_back(io::field_from(f));
  NumberField acc = ks[0];
  for (std::size_t i = 1; i < ks.size(); ++i) acc = field_intersect(acc, ks[i]);
  if (opt.verify)
    for (const auto& k : ks) check(find_embedding(acc, k).has_value(), "intersection does not embed in an input");
  json result = {{"field", io::field_report(acc)}, {"minpoly", to_string(acc.minpoly())}, {"degree", acc.degree()}};
  return {{"result", result}, {"citations", json::array({cite("field", kIntersectionAnchor)})}};
}

json k_of_m(const std::vector<json>& surfaces, const Options& opt) {
  std::vector<PolygonSurface> ss;
  for (const auto& s : surfaces) ss.push_back(io::surface_from(s));
  const KOfM k = k_of_M_from_samples(ss);
  json per = json::array();
  for (const auto& s : ss) {
    const HolonomyReport h = holonomy_field(s);
    if (opt.verify) {
      const auto e = find_embedding(k.field, h.field.ambient());
      check(e.has_value() && is_member((*e)(NFElement::generator(k.field)), h.field), "k(M) not inside a sample");
    }
    per.push_back(to_string(h.field.field.minpoly()));
  }
  json result = {{"field", io::field_report(k.field)},
                 {"minpoly", to_string(k.field.minpoly())},
                 {"degree", k.field.degree()},
                 {"genus", k.genus},
                 {"upper_bound", true},
                 {"sample_minpolys", per},
                 {"warnings", k.warnings}};
  return {{"result", result},
          {"citations", json::array({cite("field", kIntersectionAnchor), cite("degree", kDegreeAnchor)})}};
}

json monodromy(const json& rep_json, const std::string& mode, const Options& opt) {
  const io::RepresentationInput in = io::representation_from(rep_json);
  const IntMat pa = in.pa ? *in.pa : (in.rep.generators.empty() ? IntMat() : in.rep.generators[0]);
  require(in.pa.has_value() || !in.rep.generators.empty(), ErrorKind::InvalidInput, "no pseudo-Anosov matrix given");

  if (mode == "pa") {
    const PerronData p = perron_root(pa, opt.limits);
    json vec = json::array();
    for (const auto& x : p.eigvec) vec.push_back(to_json(x));
    json result = {{"field", io::field_report(p.field)},
                   {"factor", to_json(p.factor)},
                   {"lambda", to_json(p.lambda)},
                   {"lambda_approx", io::field_report(p.field)["approx"]},
                   {"eigenvector", vec}};
    return {{"result", result}, {"citations", json::array({cite("lambda", kPerronAnchor)})}};
  }

  if (mode == "decompose") {
    const Decomposition d = isotypic_decomposition(in.rep, pa, opt.limits);
    const int genus = in.genus ? *in.genus : static_cast<int>(in.rep.dim / 2);
    const NumberField kf = d.k.field;
    const KPoly g = min_poly_over(d.perron.lambda, d.k);
    const KMatrix p = primary_projection(to_field(to_rational(pa), kf), g);
    if (opt.verify) {
      check(p * p == p, "projection is not idempotent");
      const KMatrix a = to_field(to_rational(pa), kf);
      check(a * p == p * a, "projection does not commute with A");
      check(d.sum.is_direct_sum_with(d.w) && d.sum.dim() + d.w.dim() == in.rep.dim, "decomposition is not direct");
      const NumberField q;
      const KSubspace wk = KSubspace::span(to_field(d.w.basis(), q));
      for (const auto& gen : in.rep.generators) check(is_invariant(to_field(to_rational(gen), q), wk), "W not invariant");
      std::size_t total = d.w.dim();
      for (const auto& piece : d.pieces) total += piece.space.dim();
      check(total == in.rep.dim, "piece dimensions do not add up");
      check(in_subfield_of_k(p, whole_field(kf)), "projection entries outside k");
    }
    json pieces = json::array();
    for (const auto& piece : d.pieces) {
      json j = ksubspace_json(piece.space);
      j["label"] = piece.label;
      j["embedding"] = io::field_report(piece.field);
      pieces.push_back(j);
    }
    json result = {{"lambda_field", io::field_report(d.perron.field)},
                   {"k", subfield_json(d.k)},
                   {"k_minpoly", to_string(kf.minpoly())},
                   {"k_degree", d.k.degree()},
                   {"v_id_dim", d.v_id.dim()},
                   {"pieces", pieces},
                   {"sum", qsubspace_json(d.sum)},
                   {"w", qsubspace_json(d.w)},
                   {"multiplicity_one", d.multiplicity_one},
                   {"projection_rank", rank(p)},
                   {"genus", genus},
                   {"dimension_inequality", dimension_inequality_check(d, genus)}};
    return {{"result", result},
            {"citations", json::array({cite("pieces", kDecompositionAnchor), cite("k", kTraceAnchor),
                                       cite("projection_rank", kProjectionAnchor),
                                       cite("dimension_inequality", kInequalityAnchor)})}};
  }

  if (mode == "blocks") {
    const IntMat proj = in.proj ? *in.proj : kernel_first_projection(in.rep.dim, 0);
    const BlockStructure b = relative_block_structure(pa, proj, opt.limits.block_power_bound);
    json result = {{"power", b.power},
                   {"ker_p", qsubspace_json(b.ker_p)},
                   {"absolute", to_json(b.absolute)},
                   {"off_diagonal", to_json(b.off_diagonal)},
                   {"charpoly_power", to_json(b.charpoly_power)},
                   {"charpoly_absolute", to_json(b.charpoly_absolute)}};
    return {{"result", result}, {"citations", json::array({cite("power", kBlockAnchor)})}};
  }
  throw Error(ErrorKind::InvalidInput, "unknown monodromy mode " + mode);
}

json typical(const json& input, const json& ambient_json, const Options& opt) {
  const AmbientModel m = io::ambient_from(ambient_json);
  std::vector<ExtendedPeriod> z;
  std::vector<std::string> symbols;
  Verdict v;
  if (io::is_surface(input)) {
    const PolygonSurface s = io::surface_from(input);
    for (const auto& p : periods(s, homology(s))) z.push_back({p, {}});
    v = is_typical(z, symbols, m, holonomy_field(s).field, opt.limits);
  } else {
    io::PeriodsInput p = io::periods_from(input);
    z = std::move(p.entries);
    symbols = std::move(p.symbols);
    v = is_typical(z, symbols, m, opt.limits);
  }
  if (opt.verify && v.witness) {
    check(substitute(z, v.witness->relation, v.witness->k).is_zero(), "witness does not vanish");
  }
  const GenericReport g = generic_verdict(v, m);
  json result = {{"verdict", v.typical ? "Typical" : "Special"},
                 {"status", g.status},
                 {"claim", g.claim},
                 {"checked_degrees", v.checked_degrees},
                 {"warnings", v.warnings}};
  if (v.witness) {
    json rel = json::array();
    for (const auto& c : v.witness->relation) rel.push_back(to_json(c));
    result["witness"] = {{"field", subfield_json(v.witness->k)}, {"relation", rel}};
  }
  return {{"result", result}, {"citations", json::array({cite("verdict", kTypicalAnchor)})}};
}

}  // namespace holofield::reports
