#include "holofield/monodromy.hpp"

#include <algorithm>

#include "holofield/factor.hpp"
#include "holofield/holonomy.hpp"

namespace holofield {

namespace {

KMatrix lift(const IntMat& a, const NumberField& k) { return to_field(to_rational(a), k); }

IntMat kronecker(const IntMat& a, const IntMat& b) {
  IntMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

Rational abs_upper(const Interval& i) { return std::max(Rational(abs(i.lo)), Rational(abs(i.hi))); }
Rational abs_lower(const Interval& i) {
  if (i.contains_zero()) return Rational(0);
  return std::min(Rational(abs(i.lo)), Rational(abs(i.hi)));
}

bool same_root(const QPoly& p, const Interval& a, const Interval& b) {
  const Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  return lo <= hi && count_roots(p, lo, hi) == 1;
}

// |r| < target, both isolated and distinct in absolute value.
bool certified_below(RealRoot r, RealRoot target, int budget) {
  for (int step = 0; step < budget; ++step) {
    if (abs_upper(r.interval) < target.interval.lo) return true;
    if (abs_lower(r.interval) > target.interval.hi) return false;
    if (r.interval.width() > target.interval.width()) {
      r = r.bisected();
    } else {
      target = target.bisected();
    }
  }
  throw Error(ErrorKind::BudgetExceeded, "modulus comparison did not resolve within the refinement budget");
}

KSubspace to_k(const QSubspace& s, const NumberField& k) {
  return KSubspace::span(to_field(s.basis(), k));
}

QSubspace to_q(const KSubspace& s) {
  QMatrix m(s.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
      const NFElement& x = s.basis()(i, j);
      require(x.is_rational(), ErrorKind::VerificationFailed, "subspace is not defined over Q");
      m(i, j) = x.rational_value();
    }
  return QSubspace::span(m);
}

KMatrix transported(const KMatrix& m, const NumberField& k) {
  return m.map([&](const NFElement& x) { return NFElement(k, x.coords()); }, NFElement(k));
}

}  // namespace

Representation Representation::make(std::size_t dim, std::vector<IntMat> generators, std::vector<std::string> labels) {
  for (const auto& g : generators) {
    require(g.rows() == dim && g.cols() == dim, ErrorKind::InvalidInput, "generator has the wrong size");
    require(is_unimodular(g), ErrorKind::InvalidInput, "generator is not invertible over Z");
  }
  if (labels.empty())
    for (std::size_t i = 0; i < generators.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
  require(labels.size() == generators.size(), ErrorKind::InvalidInput, "label count differs from generator count");
  return {dim, std::move(generators), std::move(labels)};
}

std::vector<IntMat> Representation::inverses() const {
  std::vector<IntMat> out;
  for (const auto& g : generators) out.push_back(*inverse_int(g));
  return out;
}

PerronData perron_root(const IntMat& a, const Limits& limits) {
  require(a.rows() == a.cols() && a.rows() > 0, ErrorKind::InvalidInput, "matrix must be square and nonempty");
  require(determinant_int(a) != 0, ErrorKind::InvalidInput, "matrix is singular");
  const std::size_t n = a.rows();
  const QPoly f = charpoly_int(a);
  const int cap = std::max(limits.factor_degree_cap, static_cast<int>(n));

  struct Candidate {
    RealRoot root;
    QPoly factor;
    int multiplicity;
  };
  std::vector<Candidate> real;
  for (const auto& fac : factor_over_Q(f, cap))
    for (const auto& r : isolate_real_roots(fac.factor)) real.push_back({r, fac.factor, fac.multiplicity});
  require(!real.empty(), ErrorKind::NotSimple, "no real eigenvalue");
  const Rational w(Integer(1), Integer(1) << 80);
  for (auto& c : real) c.root = c.root.refined(w);
  const auto best = std::max_element(real.begin(), real.end(), [](const Candidate& x, const Candidate& y) {
    return Rational(abs(x.root.interval.midpoint())) < Rational(abs(y.root.interval.midpoint()));
  });
  require(best->multiplicity == 1, ErrorKind::NotSimple, "eigenvalue of maximal modulus is repeated");

  PerronData out{NumberField::rationals(), NFElement(), {}, best->factor};
  if (best->factor.degree() == 1) {
    out.lambda = NFElement(out.field, -best->factor[0]);
  } else {
    out.field = NumberField::from_irreducible(best->factor, best->root.interval);
    out.lambda = NFElement::generator(out.field);
  }
  const NumberField& k = out.field;

  // roots of charpoly(A (x) A) are all products of two eigenvalues: lambda is
  // simple and strictly dominant iff lambda^2 is a simple root strictly larger
  // in modulus than every other real root
  const QPoly big = charpoly_int(kronecker(a, a));
  const NFElement l2 = out.lambda * out.lambda;
  const QPoly p = minimal_polynomial(l2);
  QPoly rest = big;
  int mult = 0;
  for (;;) {
    auto [q, r] = rest.divmod(p);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++mult;
  }
  require(mult == 1, ErrorKind::NotSimple, "eigenvalue of maximal modulus is not strictly dominant");
  require(!big.eval(-l2, NFElement(k)).is_zero(), ErrorKind::NotSimple,
          "an eigenvalue product has the same modulus as lambda^2");
  RealRoot target = select_root(p, [&](const Rational& width) { return enclose(l2, width); });
  while (sgn(target.interval.lo) <= 0) target = target.bisected();
  std::vector<RealRoot> others = isolate_real_roots(rest);
  for (const auto& r : isolate_real_roots(p))
    if (!same_root(p, r.interval, target.interval)) others.push_back(r);
  for (const auto& r : others)
    require(certified_below(r, target, limits.refinement_budget), ErrorKind::NotSimple,
            "an eigenvalue of larger modulus exists");

  KMatrix m = lift(a, k) - out.lambda * KMatrix::identity(n, NFElement(k));
  const KSubspace ker = kernel(m);
  require(ker.dim() == 1, ErrorKind::NotSimple, "eigenspace is not one-dimensional");
  out.eigvec = ker.vectors()[0];
  const auto image = lift(a, k).apply(out.eigvec);
  for (std::size_t i = 0; i < n; ++i)
    require(image[i] == out.lambda * out.eigvec[i], ErrorKind::VerificationFailed, "eigenvector check failed");
  return out;
}

KPoly min_poly_over(const NFElement& lambda, const Subfield& k) {
  require(k.ambient() == lambda.field(), ErrorKind::FieldMismatch, "subfield does not sit in lambda's field");
  const QPoly m = minimal_polynomial(lambda);
  const NFElement zero(lambda.field());
  for (const auto& fac : factor_over_K(to_field(m, k.field))) {
    const KPoly image = fac.factor.map([&](const NFElement& c) { return k.embedding(c); }, zero);
    if (image(lambda).is_zero()) return fac.factor;
  }
  throw Error(ErrorKind::VerificationFailed, "no factor of the minimal polynomial vanishes at lambda");
}

KMatrix primary_projection(const KMatrix& a, const KPoly& g_in) {
  require(a.rows() == a.cols(), ErrorKind::InvalidInput, "matrix must be square");
  require(!g_in.is_zero() && g_in.degree() >= 1, ErrorKind::NotADivisor, "g must have positive degree");
  const KPoly g = g_in.monic();
  const KPoly f = charpoly(a);
  auto [h, rem] = f.divmod(g);
  require(rem.is_zero(), ErrorKind::NotADivisor, "g does not divide the characteristic polynomial");
  const auto eg = extended_gcd(g, h);
  require(eg.g.degree() == 0, ErrorKind::NotCoprime, "g is not coprime to charpoly / g");
  const KMatrix p = poly_of_matrix(eg.t * h, a);
  require(p * p == p && p * a == a * p, ErrorKind::VerificationFailed, "projection check failed");
  return p;
}

KMatrix primary_projection(const IntMat& a, const KPoly& g) {
  return primary_projection(lift(a, g.leading().field()), g);
}

KSubspace orbit_span(const Representation& r, const std::vector<NFElement>& v) {
  require(v.size() == r.dim, ErrorKind::InvalidInput, "vector length does not match the representation");
  const NumberField k = v[0].field();
  std::vector<KMatrix> maps;
  for (const auto& g : r.generators) maps.push_back(lift(g, k));
  for (const auto& g : r.inverses()) maps.push_back(lift(g, k));
  KSubspace s = KSubspace::span({v}, r.dim, NFElement(k));
  require(s.dim() == 1, ErrorKind::InvalidInput, "orbit of the zero vector");
  for (;;) {
    std::vector<std::vector<NFElement>> vecs = s.vectors();
    for (const auto& b : s.vectors())
      for (const auto& m : maps) vecs.push_back(m.apply(b));
    KSubspace next = KSubspace::span(vecs, r.dim, NFElement(k));
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

KSubspace invariant_complement(const Representation& r, const KSubspace& u) {
  const std::size_t n = r.dim;
  require(u.ambient_dim() == n, ErrorKind::InvalidInput, "subspace has the wrong ambient dimension");
  const NFElement zero = u.zero();
  const NumberField k = zero.field();
  std::vector<KMatrix> gens;
  for (const auto& g : r.generators) {
    gens.push_back(lift(g, k));
    require(is_invariant(gens.back(), u), ErrorKind::NotInvariant, "subspace is not invariant");
  }
  if (u.dim() == n) return KSubspace(n, zero);
  if (u.dim() == 0) return KSubspace::full(n, zero);

  // unknown projection P onto U commuting with every generator; W = ker P
  const KMatrix eq = u.equations();
  const std::size_t rows = gens.size() * n * n + u.dim() * n + eq.rows() * n;
  KMatrix sys(rows, n * n, zero);
  std::vector<NFElement> rhs(rows, zero);
  std::size_t row = 0;
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row)
        for (std::size_t t = 0; t < n; ++t) {
          sys(row, var(i, t)) += g(t, j);
          sys(row, var(t, j)) -= g(i, t);
        }
  for (const auto& b : u.vectors())
    for (std::size_t i = 0; i < n; ++i, ++row) {
      for (std::size_t j = 0; j < n; ++j) sys(row, var(i, j)) = b[j];
      rhs[row] = b[i];
    }
  for (std::size_t e = 0; e < eq.rows(); ++e)
    for (std::size_t j = 0; j < n; ++j, ++row)
      for (std::size_t i = 0; i < n; ++i) sys(row, var(i, j)) = eq(e, i);
  const auto sol = solve(sys, rhs);
  require(sol.has_value(), ErrorKind::NoComplement, "no invariant complement exists");
  KMatrix p(n, n, zero);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = (*sol)[var(i, j)];
  KSubspace w = kernel(p);
  require(w.dim() + u.dim() == n && u.is_direct_sum_with(w), ErrorKind::VerificationFailed,
          "complement is not direct");
  for (const auto& g : gens) require(is_invariant(g, w), ErrorKind::VerificationFailed, "complement not invariant");
  return w;
}

KMatrix restrict_to(const IntMat& g, const KSubspace& v) {
  const KMatrix m = lift(g, v.zero().field());
  const std::size_t d = v.dim();
  KMatrix out(d, d, v.zero());
  const auto basis = v.vectors();
  for (std::size_t j = 0; j < d; ++j) {
    const auto image = m.apply(basis[j]);
    require(v.contains(image), ErrorKind::NotInvariant, "subspace is not invariant under a generator");
    const auto c = v.coordinates(image);
    for (std::size_t i = 0; i < d; ++i) out(i, j) = c[i];
  }
  return out;
}

Subfield trace_field(const Representation& r, const KSubspace& v, const Limits& limits) {
  const NumberField k = v.zero().field();
  Subfield field = rational_subfield(k);
  if (r.generators.empty() || v.dim() == 0) return field;
  std::vector<KMatrix> letters;
  for (const auto& g : r.generators) letters.push_back(restrict_to(g, v));
  for (const auto& g : r.inverses()) letters.push_back(restrict_to(g, v));
  const std::size_t half = r.generators.size();
  auto inverse_letter = [half](std::size_t l) { return l < half ? l + half : l - half; };

  std::vector<NFElement> traces;
  auto absorb = [&](const KMatrix& m) {
    const NFElement t = trace(m);
    if (is_member(t, field)) return;
    traces.push_back(t);
    field = field_generated_by(traces, k);
  };
  const int max_len = limits.trace_max_length > 0 ? limits.trace_max_length : static_cast<int>(2 * v.dim());
  std::vector<std::pair<KMatrix, std::size_t>> level;
  for (std::size_t l = 0; l < letters.size(); ++l) {
    level.emplace_back(letters[l], l);
    absorb(letters[l]);
  }
  int stable = 0;
  for (int len = 2; len <= max_len && field.degree() < k.degree(); ++len) {
    const int before = field.degree();
    std::vector<std::pair<KMatrix, std::size_t>> next;
    for (const auto& [m, last] : level)
      for (std::size_t l = 0; l < letters.size(); ++l) {
        if (l == inverse_letter(last)) continue;
        require(next.size() < static_cast<std::size_t>(limits.orbit_generators_cap), ErrorKind::BudgetExceeded,
                "word enumeration exceeded its budget");
        next.emplace_back(m * letters[l], l);
        absorb(next.back().first);
      }
    level = std::move(next);
    stable = field.degree() == before ? stable + 1 : 0;
    if (stable >= limits.trace_stable_lengths) break;
  }
  return field;
}

Subfield trace_field(const Representation& r, const Limits& limits) {
  return trace_field(r, KSubspace::full(r.dim, NFElement(NumberField::rationals())), limits);
}

Decomposition isotypic_decomposition(const Representation& r, const IntMat& a_pa, const Limits& limits) {
  require(a_pa.rows() == r.dim && a_pa.cols() == r.dim, ErrorKind::InvalidInput, "pseudo-Anosov has the wrong size");
  Representation all = r;
  if (std::find(all.generators.begin(), all.generators.end(), a_pa) == all.generators.end()) {
    all.generators.push_back(a_pa);
    all.labels.push_back("pa");
  }
  Decomposition d{perron_root(a_pa, limits), KSubspace(r.dim, NFElement()), rational_subfield(NumberField())};
  const NumberField l = d.perron.field;
  d.v_id = orbit_span(all, d.perron.eigvec);
  d.k = field_of_definition_subspace(d.v_id).field;
  const Subfield tf = trace_field(all, d.v_id, limits);
  require(tf == d.k, ErrorKind::TraceFieldMismatch,
          "trace field of the Perron piece (degree " + std::to_string(tf.degree()) +
              ") differs from its field of definition (degree " + std::to_string(d.k.degree()) + ")");

  const NumberField kf = d.k.field;
  const std::size_t deg = static_cast<std::size_t>(kf.degree());
  KMatrix base(d.v_id.dim(), r.dim, NFElement(kf));
  for (std::size_t i = 0; i < d.v_id.dim(); ++i)
    for (std::size_t j = 0; j < r.dim; ++j) base(i, j) = to_subfield(d.v_id.basis()(i, j), d.k);

  const auto embeddings = real_embeddings(kf);
  require(embeddings.size() == deg, ErrorKind::Unsupported,
          "field of definition has non-real conjugates; only totally real fields are supported");
  for (std::size_t e = 0; e < embeddings.size(); ++e) {
    const NumberField fe = e == 0 ? kf : NumberField::from_irreducible(kf.minpoly(), embeddings[e].interval);
    ConjugatePiece piece{fe, KSubspace::span(transported(base, fe)), e == 0 ? "id" : "sigma" + std::to_string(e)};
    for (const auto& g : all.generators)
      require(is_invariant(lift(g, fe), piece.space), ErrorKind::VerificationFailed, "conjugate piece not invariant");
    d.pieces.push_back(std::move(piece));
  }

  // the sum of the conjugates is the Q-span of coordinatewise traces Tr(theta^a b)
  std::vector<std::vector<Rational>> traced;
  const NFElement theta = NFElement::generator(kf);
  for (const auto& b : base.to_rows())
    for (std::size_t a = 0; a < deg; ++a) {
      const NFElement s = theta.pow(static_cast<unsigned>(a));
      std::vector<Rational> v;
      for (const auto& x : b) v.push_back(trace(s * x));
      traced.push_back(std::move(v));
    }
  d.sum = QSubspace::span(traced, r.dim, Rational(0));
  require(d.sum.dim() == deg * d.v_id.dim(), ErrorKind::VerificationFailed, "conjugate pieces are not independent");
  const QMatrix eq = d.sum.equations();
  for (const auto& piece : d.pieces) {
    const KMatrix lhs = to_field(eq, piece.field) * piece.space.basis().transpose();
    require(lhs.is_zero_matrix(), ErrorKind::VerificationFailed, "conjugate piece escapes the rational sum");
  }

  const NumberField q = NumberField::rationals();
  d.w = to_q(invariant_complement(all, to_k(d.sum, q)));
  d.multiplicity_one = true;
  if (d.w.dim() > 0) {
    const KMatrix aw = restrict_to(a_pa, to_k(d.w, q));
    const QPoly cw = charpoly(aw.map([](const NFElement& x) { return x.rational_value(); }, Rational(0)));
    d.multiplicity_one = !cw.eval(d.perron.lambda, NFElement(l)).is_zero();
  }
  return d;
}

IntMat kernel_first_projection(std::size_t n, std::size_t kernel_dim) {
  require(kernel_dim <= n, ErrorKind::InvalidInput, "kernel larger than the space");
  IntMat p(n - kernel_dim, n);
  for (std::size_t i = 0; i < n - kernel_dim; ++i) p(i, kernel_dim + i) = 1;
  return p;
}

BlockStructure relative_block_structure(const IntMat& a_rel, const IntMat& proj, int bound) {
  const std::size_t n = a_rel.rows();
  require(a_rel.cols() == n && proj.cols() == n, ErrorKind::InvalidInput, "matrix sizes do not match");
  const QMatrix a = to_rational(a_rel), p = to_rational(proj);
  BlockStructure out;
  out.ker_p = kernel(p);
  const auto ker = out.ker_p.vectors();
  QMatrix am = a;
  int m = 1;
  for (;; ++m) {
    const bool fixed = std::all_of(ker.begin(), ker.end(), [&](const auto& v) { return am.apply(v) == v; });
    if (fixed) break;
    require(m < bound, ErrorKind::NotBlockTriangular,
            "no power up to " + std::to_string(bound) + " fixes ker p pointwise");
    am = am * a;
  }
  out.power = m;

  const std::size_t r = p.rows(), d = out.ker_p.dim();
  require(r + d == n, ErrorKind::InvalidInput, "projection is not surjective");
  QMatrix s(n, r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> e(r);
    e[i] = 1;
    const auto col = solve(p, e);
    require(col.has_value(), ErrorKind::InvalidInput, "projection is not surjective");
    for (std::size_t j = 0; j < n; ++j) s(j, i) = (*col)[j];
  }
  out.absolute = p * am * s;
  require(p * am == out.absolute * p, ErrorKind::NotBlockTriangular, "power does not preserve ker p");

  QMatrix basis(n, n);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = ker[j][i];
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, d + j) = s(i, j);
  const QMatrix c = *inverse(basis) * am * basis;
  out.off_diagonal = QMatrix(d, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < d && j >= d) {
        out.off_diagonal(i, j - d) = c(i, j);
      } else if (i >= d && j >= d) {
        require(c(i, j) == out.absolute(i - d, j - d), ErrorKind::VerificationFailed, "absolute block mismatch");
      } else {
        require(c(i, j) == Rational(i == j ? 1 : 0), ErrorKind::VerificationFailed, "kernel block is not identity");
      }
    }

  out.charpoly_power = charpoly(am);
  out.charpoly_absolute = charpoly(out.absolute);
  QPoly expected = out.charpoly_absolute;
  for (std::size_t i = 0; i < d; ++i) expected *= qpoly_from_ints({-1, 1});
  require(expected == out.charpoly_power, ErrorKind::VerificationFailed, "characteristic polynomial does not split");
  return out;
}

BlockStructure relative_block_structure(const IntMat& a_rel, const HomologyData& h, int bound) {
  return relative_block_structure(a_rel, h.proj, bound);
}

bool dimension_inequality_check(std::size_t dim, int degree, int genus) {
  return static_cast<long>(dim) * degree <= 2L * genus;
}

bool dimension_inequality_check(const Decomposition& d, int genus) {
  return dimension_inequality_check(d.v_id.dim(), d.k.degree(), genus);
}

}  // namespace holofield
