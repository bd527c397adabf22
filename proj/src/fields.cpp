#include "holofield/fields.hpp"

#include <algorithm>

#include "holofield/factor.hpp"

namespace holofield {

namespace {

KPoly kpoly(std::vector<NFElement> c, const NumberField& field) { return KPoly(std::move(c), NFElement(field)); }

bool square_free(const QPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

NFElement eval_at(const KPoly& p, const NFElement& x) { return p.eval(x, NFElement(x.field())); }

}  // namespace

QPoly norm_poly(const KPoly& g) {
  const NumberField& field = g.zero().field();
  require(g.is_monic(), ErrorKind::InvalidInput, "norm of a non-monic polynomial");
  const std::size_t n = static_cast<std::size_t>(field.degree());
  const std::size_t d = static_cast<std::size_t>(g.degree());
  auto idx = [n](std::size_t a, std::size_t b) { return b * n + a; };
  QMatrix m(n * d, n * d);
  NFElement theta_a(field, Rational(1));
  const NFElement theta = NFElement::generator(field);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b + 1 < d; ++b) m(idx(a, b + 1), idx(a, b)) = 1;
    for (std::size_t k = 0; k < d; ++k) {
      const NFElement c = -(theta_a * g[k]);
      for (std::size_t a2 = 0; a2 < n; ++a2) m(idx(a2, k), idx(a, d - 1)) = c.coords()[a2];
    }
    if (n > 1) theta_a *= theta;
  }
  return charpoly(m);
}

std::vector<KFactor> factor_over_K(const KPoly& f, int degree_cap) {
  require(!f.is_zero(), ErrorKind::InvalidInput, "factorization of the zero polynomial");
  const NumberField field = f.zero().field();
  std::vector<KFactor> out;
  if (field.is_rational()) {
    std::vector<Rational> q;
    for (const auto& c : f.coeffs()) q.push_back(c.rational_value());
    for (const auto& fac : factor_over_Q(QPoly(std::move(q)), degree_cap))
      out.push_back({to_field(fac.factor, field), fac.multiplicity});
    return out;
  }
  const NFElement theta = NFElement::generator(field);
  for (const auto& [g, mult] : square_free_decomposition(f)) {
    if (g.degree() == 1) {
      out.push_back({g, mult});
      continue;
    }
    bool done = false;
    for (int step = 0; step < 64 && !done; ++step) {
      const long s = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
      const NFElement shift = Rational(s) * theta;
      const KPoly gs = s == 0 ? g : g.compose(kpoly({-shift, NFElement(field, Rational(1))}, field));
      const QPoly norm = norm_poly(gs);
      if (!square_free(norm)) continue;
      const auto factors = factor_over_Q(norm, degree_cap);
      const KPoly back = kpoly({shift, NFElement(field, Rational(1))}, field);
      for (const auto& fac : factors) {
        const KPoly h = gcd(to_field(fac.factor, field), gs);
        if (h.degree() < 1) continue;
        out.push_back({(s == 0 ? h : h.compose(back)).monic(), mult});
      }
      done = true;
    }
    require(done, ErrorKind::BudgetExceeded, "no square-free norm found within the shift budget");
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const KFactor& a, const KFactor& b) { return a.factor.degree() < b.factor.degree(); });
  return out;
}

FieldEmbedding::FieldEmbedding(NumberField source, NumberField target, QMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
  require(m_.rows() == static_cast<std::size_t>(target_.degree()) &&
              m_.cols() == static_cast<std::size_t>(source_.degree()),
          ErrorKind::InvalidInput, "embedding matrix has the wrong shape");
}

FieldEmbedding FieldEmbedding::identity(const NumberField& field) {
  return FieldEmbedding(field, field, QMatrix::identity(static_cast<std::size_t>(field.degree()), Rational(0)));
}

FieldEmbedding FieldEmbedding::from_rationals(const NumberField& target) {
  QMatrix m(static_cast<std::size_t>(target.degree()), 1);
  m(0, 0) = 1;
  return FieldEmbedding(NumberField::rationals(), target, std::move(m));
}

FieldEmbedding FieldEmbedding::from_generator_image(const NumberField& source, const NFElement& image) {
  const std::size_t n = static_cast<std::size_t>(source.degree());
  const NumberField& target = image.field();
  if (n == 1) return from_rationals(target);
  QMatrix m(static_cast<std::size_t>(target.degree()), n);
  NFElement p(target, Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = p.coords()[i];
    p *= image;
  }
  return FieldEmbedding(source, target, std::move(m));
}

NFElement FieldEmbedding::operator()(const NFElement& a) const {
  require(a.field() == source_, ErrorKind::FieldMismatch, "element is not in the embedding's source field");
  return NFElement(target_, m_.apply(a.coords()));
}

std::optional<NFElement> FieldEmbedding::preimage(const NFElement& a) const {
  require(a.field() == target_, ErrorKind::FieldMismatch, "element is not in the embedding's target field");
  auto x = solve(m_, a.coords());
  if (!x) return std::nullopt;
  return NFElement(source_, std::move(*x));
}

QSubspace FieldEmbedding::image() const { return QSubspace::span(m_.transpose()); }

std::optional<FieldEmbedding> find_embedding(const NumberField& from, const NumberField& into, int degree_cap) {
  if (from.is_rational()) return FieldEmbedding::from_rationals(into);
  if (into.degree() % from.degree() != 0) return std::nullopt;
  if (from == into) return FieldEmbedding::identity(into);
  const NFElement lo(into, from.embedding().lo), hi(into, from.embedding().hi);
  for (const auto& fac : factor_over_K(to_field(from.minpoly(), into), degree_cap)) {
    if (fac.factor.degree() != 1) continue;
    const NFElement r = -fac.factor[0];
    if (sign(r - lo) > 0 && sign(hi - r) > 0) return FieldEmbedding::from_generator_image(from, r);
  }
  return std::nullopt;
}

RealRoot select_root(const QPoly& poly, const std::function<Interval(const Rational&)>& enclosure) {
  std::vector<RealRoot> roots = isolate_real_roots(poly);
  require(!roots.empty(), ErrorKind::VerificationFailed, "polynomial has no real root to select");
  if (roots.size() == 1) return roots[0];
  Rational w = 1;
  for (int iter = 0; iter < 400; ++iter) {
    const Interval enc = enclosure(w);
    std::vector<RealRoot> hits;
    for (const auto& r : roots)
      if (r.interval.lo <= enc.hi && enc.lo <= r.interval.hi) hits.push_back(r);
    require(!hits.empty(), ErrorKind::VerificationFailed, "enclosure meets no root");
    if (hits.size() == 1) return hits[0];
    roots.clear();
    for (const auto& r : hits) roots.push_back(r.refined(w));
    w /= 4;
  }
  throw Error(ErrorKind::BudgetExceeded, "root selection did not converge");
}

NumberField field_of_element(const NFElement& a) {
  const QPoly m = minimal_polynomial(a);
  if (m.degree() == 1) return NumberField::rationals();
  const RealRoot r = select_root(m, [&](const Rational& w) { return enclose(a, w); });
  return NumberField::from_irreducible(m, r.interval);
}

Compositum field_join(const NumberField& k1, const NumberField& k2) {
  if (k1.is_rational()) return {k2, FieldEmbedding::from_rationals(k2), FieldEmbedding::identity(k2)};
  if (k2.is_rational()) return {k1, FieldEmbedding::identity(k1), FieldEmbedding::from_rationals(k1)};
  if (auto e = find_embedding(k2, k1)) return {k1, FieldEmbedding::identity(k1), *e};
  if (auto e = find_embedding(k1, k2)) return {k2, *e, FieldEmbedding::identity(k2)};

  const NFElement one2(k2, Rational(1));
  const NFElement theta2 = NFElement::generator(k2);
  for (long c = 1; c <= 64; ++c) {
    // norm over k2 of m1(x - c*theta2), whose roots are theta1' + c*theta2'
    const KPoly shifted = to_field(k1.minpoly(), k2).compose(kpoly({-(Rational(c) * theta2), one2}, k2));
    const QPoly norm = norm_poly(shifted);
    if (!square_free(norm)) continue;
    const RealRoot gamma = select_root(norm, [&](const Rational& w) {
      const Interval i1 = k1.root().refined(w / 2).interval;
      const Interval i2 = k2.root().refined(w / (2 * c)).interval;
      return i1 + Rational(c) * i2;
    });
    QPoly minpoly;
    for (const auto& fac : factor_over_Q(norm, kInternalFactorDegreeCap)) {
      if (count_roots(fac.factor, gamma.interval.lo, gamma.interval.hi) == 1) {
        minpoly = fac.factor;
        break;
      }
    }
    const NumberField m = NumberField::from_irreducible(minpoly, gamma.interval);
    const NFElement g = NFElement::generator(m);
    const NFElement one(m, Rational(1));
    const KPoly p2 = to_field(k2.minpoly(), m);
    const KPoly p1 = to_field(k1.minpoly(), m).compose(kpoly({g, Rational(-c) * one}, m));
    const KPoly common = gcd(p2, p1);
    require(common.degree() == 1, ErrorKind::VerificationFailed, "compositum generator does not separate roots");
    const NFElement t2 = -common[0];
    const NFElement t1 = g - Rational(c) * t2;
    require(eval_at(to_field(k1.minpoly(), m), t1).is_zero() && eval_at(p2, t2).is_zero(),
            ErrorKind::VerificationFailed, "compositum embedding check failed");
    return {m, FieldEmbedding::from_generator_image(k1, t1), FieldEmbedding::from_generator_image(k2, t2)};
  }
  throw Error(ErrorKind::BudgetExceeded, "no primitive element found for the compositum");
}

Subfield whole_field(const NumberField& ambient) {
  return {ambient, FieldEmbedding::identity(ambient),
          QSubspace::full(static_cast<std::size_t>(ambient.degree()), Rational(0))};
}

Subfield rational_subfield(const NumberField& ambient) {
  const FieldEmbedding e = FieldEmbedding::from_rationals(ambient);
  return {NumberField::rationals(), e, e.image()};
}

Subfield subfield_from_embedding(const FieldEmbedding& e) { return {e.source(), e, e.image()}; }

Subfield subfield_from_span(const QSubspace& span, const NumberField& ambient) {
  const std::size_t d = span.dim();
  if (d == static_cast<std::size_t>(ambient.degree())) return whole_field(ambient);
  if (d <= 1) return rational_subfield(ambient);
  std::vector<NFElement> basis;
  for (const auto& row : span.vectors()) basis.emplace_back(ambient, row);
  auto try_candidate = [&](const NFElement& gamma) -> std::optional<Subfield> {
    const QPoly m = minimal_polynomial(gamma);
    if (static_cast<std::size_t>(m.degree()) != d) return std::nullopt;
    const RealRoot r = select_root(m, [&](const Rational& w) { return enclose(gamma, w); });
    const NumberField k = NumberField::from_irreducible(m, r.interval);
    return Subfield{k, FieldEmbedding::from_generator_image(k, gamma), span};
  };
  for (const auto& b : basis)
    if (auto s = try_candidate(b)) return *s;
  for (long c = 1; c <= 1000; ++c) {
    NFElement gamma(ambient);
    Rational coef = 1;
    for (const auto& b : basis) {
      gamma += coef * b;
      coef *= c;
    }
    if (auto s = try_candidate(gamma)) return *s;
  }
  throw Error(ErrorKind::BudgetExceeded, "no primitive element found for the subfield");
}

bool is_member(const NFElement& a, const Subfield& k) {
  require(a.field() == k.ambient(), ErrorKind::FieldMismatch, "element is not in the subfield's ambient field");
  return k.span.contains(a.coords());
}

NFElement to_subfield(const NFElement& a, const Subfield& k) {
  auto x = k.embedding.preimage(a);
  require(x.has_value(), ErrorKind::InvalidInput, "element is not a member of the subfield");
  return *x;
}

Subfield field_generated_by(const std::vector<NFElement>& elements, const NumberField& ambient) {
  const std::size_t n = static_cast<std::size_t>(ambient.degree());
  std::vector<std::vector<Rational>> vecs{NFElement(ambient, Rational(1)).coords()};
  for (const auto& e : elements) {
    require(e.field() == ambient, ErrorKind::FieldMismatch, "generator is not in the ambient field");
    vecs.push_back(e.coords());
  }
  QSubspace span = QSubspace::span(vecs, n, Rational(0));
  while (span.dim() < n) {
    std::vector<NFElement> basis;
    for (const auto& row : span.vectors()) basis.emplace_back(ambient, row);
    std::vector<std::vector<Rational>> prods = span.vectors();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) prods.push_back((basis[i] * basis[j]).coords());
    QSubspace next = QSubspace::span(prods, n, Rational(0));
    if (next.dim() == span.dim()) break;
    span = std::move(next);
  }
  return subfield_from_span(span, ambient);
}

Subfield intersect_subfields(const Subfield& a, const Subfield& b) {
  require(a.ambient() == b.ambient(), ErrorKind::FieldMismatch, "subfields of different ambient fields");
  const QSubspace s = a.span.intersect(b.span);
  if (s == a.span) return a;
  if (s == b.span) return b;
  return subfield_from_span(s, a.ambient());
}

NumberField field_intersect(const NumberField& k1, const NumberField& k2) {
  if (k1.is_rational() || k2.is_rational()) return NumberField::rationals();
  const Compositum j = field_join(k1, k2);
  const QSubspace s = j.first.image().intersect(j.second.image());
  if (s.dim() == static_cast<std::size_t>(k1.degree())) return k1;
  if (s.dim() == static_cast<std::size_t>(k2.degree())) return k2;
  return subfield_from_span(s, j.field).field;
}

std::vector<Subfield> subfields(const NumberField& field, int degree_cap) {
  require(field.degree() <= degree_cap, ErrorKind::DegreeLimitExceeded,
          "subfield enumeration is capped at degree " + std::to_string(degree_cap) + ", field has degree " +
              std::to_string(field.degree()));
  if (field.is_rational()) return {whole_field(field)};
  const NFElement theta = NFElement::generator(field);
  std::optional<KPoly> linear;
  std::vector<KPoly> others;
  for (const auto& fac : factor_over_K(to_field(field.minpoly(), field))) {
    if (!linear && fac.factor.degree() == 1 && fac.factor[0] == -theta) {
      linear = fac.factor;
    } else {
      others.push_back(fac.factor);
    }
  }
  require(linear.has_value(), ErrorKind::VerificationFailed, "minimal polynomial has no factor x - theta");
  std::vector<Subfield> found;
  const std::size_t r = others.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    KPoly g = *linear;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) g *= others[i];
    Subfield l = field_generated_by(g.coeffs(), field);
    if (g.degree() * l.degree() != field.degree()) continue;
    if (std::none_of(found.begin(), found.end(), [&](const Subfield& s) { return s == l; }))
      found.push_back(std::move(l));
  }
  std::stable_sort(found.begin(), found.end(), [](const Subfield& a, const Subfield& b) { return a.degree() < b.degree(); });
  return found;
}

std::vector<RealRoot> real_embeddings(const NumberField& field) {
  std::vector<RealRoot> out{field.root()};
  if (field.is_rational()) return out;
  for (const auto& r : isolate_real_roots(field.minpoly())) {
    const Rational lo = std::max(r.interval.lo, field.embedding().lo);
    const Rational hi = std::min(r.interval.hi, field.embedding().hi);
    if (lo < hi && count_roots(field.minpoly(), lo, hi) == 1) continue;
    out.push_back(r);
  }
  return out;
}

}  // namespace holofield
