#include "holofield/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "holofield/factor.hpp"

namespace holofield {

namespace {

constexpr int kMaxBisections = 4000;

}  // namespace

struct NumberField::Data {
  QPoly minpoly;
  Interval embedding;
  int degree = 1;
  std::vector<std::vector<Rational>> reduction;
};

namespace {

std::vector<std::vector<Rational>> reduction_table(const QPoly& m) {
  const int n = m.degree();
  std::vector<std::vector<Rational>> table;
  // x^n = -(m_0 + ... + m_{n-1} x^{n-1})
  std::vector<Rational> cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = -m[static_cast<std::size_t>(i)];
  for (int k = 0; k + 1 < n; ++k) {
    table.push_back(cur);
    // multiply by x and reduce
    std::vector<Rational> next(static_cast<std::size_t>(n));
    const Rational top = cur.back();
    for (int i = n - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    next[0] = 0;
    if (sgn(top) != 0)
      for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] -= top * m[static_cast<std::size_t>(i)];
    cur = std::move(next);
  }
  return table;
}

}  // namespace

NumberField::NumberField() {
  static const std::shared_ptr<const Data> q = [] {
    auto d = std::make_shared<Data>();
    d->minpoly = qpoly_from_ints({0, 1});
    d->embedding = Interval(Rational(-1), Rational(1));
    d->degree = 1;
    return std::shared_ptr<const Data>(std::move(d));
  }();
  d_ = q;
}

NumberField NumberField::from_irreducible(const QPoly& minpoly, const Interval& embedding) {
  require(minpoly.degree() >= 1, ErrorKind::InvalidInput, "minimal polynomial must have positive degree");
  auto d = std::make_shared<Data>();
  d->minpoly = minpoly.monic();
  d->embedding = embedding;
  d->degree = minpoly.degree();
  d->reduction = reduction_table(d->minpoly);
  return NumberField(std::shared_ptr<const Data>(std::move(d)));
}

NumberField NumberField::create(const QPoly& minpoly, const Interval& embedding, int degree_cap) {
  require(minpoly.degree() >= 1, ErrorKind::InvalidInput, "minimal polynomial must have positive degree");
  const QPoly m = minpoly.monic();
  require(is_irreducible_over_Q(m, degree_cap), ErrorKind::ReduciblePolynomial,
          "polynomial " + to_string(m) + " is reducible over Q");
  require(embedding.lo < embedding.hi, ErrorKind::BadInterval, "empty isolating interval");
  require(sign_at(m, embedding.lo) != 0 && sign_at(m, embedding.hi) != 0, ErrorKind::BadInterval,
          "isolating interval endpoint is a root");
  const int roots = count_roots(m, embedding.lo, embedding.hi);
  require(roots == 1, ErrorKind::BadInterval,
          "interval [" + to_string(embedding.lo) + ", " + to_string(embedding.hi) + "] contains " +
              std::to_string(roots) + " roots of " + to_string(m));
  return from_irreducible(m, embedding);
}

int NumberField::degree() const { return d_->degree; }
const QPoly& NumberField::minpoly() const { return d_->minpoly; }
const Interval& NumberField::embedding() const { return d_->embedding; }
RealRoot NumberField::root() const { return {d_->minpoly, d_->embedding}; }
const std::vector<std::vector<Rational>>& NumberField::reduction() const { return d_->reduction; }

bool operator==(const NumberField& a, const NumberField& b) {
  if (a.d_ == b.d_) return true;
  if (a.degree() != b.degree()) return false;
  if (a.degree() == 1) return true;
  if (!(a.minpoly() == b.minpoly())) return false;
  const Rational lo = std::max(a.embedding().lo, b.embedding().lo);
  const Rational hi = std::min(a.embedding().hi, b.embedding().hi);
  if (lo >= hi) return false;
  return count_roots(a.minpoly(), lo, hi) == 1;
}

std::string NumberField::describe() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q[x]/(" << to_string(minpoly()) << ") root in [" << to_string(embedding().lo) << ", "
     << to_string(embedding().hi) << "]";
  return os.str();
}

NFElement::NFElement(NumberField field)
    : field_(std::move(field)), c_(static_cast<std::size_t>(field_.degree())) {}

NFElement::NFElement(NumberField field, std::vector<Rational> coords) : field_(std::move(field)), c_(std::move(coords)) {
  require(c_.size() == static_cast<std::size_t>(field_.degree()), ErrorKind::InvalidInput,
          "element needs " + std::to_string(field_.degree()) + " coordinates, got " + std::to_string(c_.size()));
}

NFElement::NFElement(NumberField field, const Rational& q) : NFElement(std::move(field)) { c_[0] = q; }

NFElement NFElement::generator(const NumberField& field) {
  if (field.degree() == 1) return NFElement(field, -field.minpoly()[0]);
  NFElement g(field);
  g.c_[1] = 1;
  return g;
}

NFElement NFElement::from_poly(const NumberField& field, const QPoly& p) {
  const QPoly r = p % field.minpoly();
  NFElement e(field);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.c_[i] = r[i];
  return e;
}

bool NFElement::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool NFElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

QPoly NFElement::as_poly() const { return QPoly(c_); }

void NFElement::check_same(const NFElement& o) const {
  require(field_ == o.field_, ErrorKind::FieldMismatch,
          "operands live in different fields: " + field_.describe() + " and " + o.field_.describe());
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

NFElement& NFElement::operator+=(const NFElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  check_same(o);
  const std::size_t n = c_.size();
  if (n == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  const auto& red = field_.reduction();
  for (std::size_t i = 0; i < n; ++i) c_[i] = prod[i];
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& row = red[k - n];
    for (std::size_t i = 0; i < n; ++i) c_[i] += prod[k] * row[i];
  }
  return *this;
}

NFElement operator*(const Rational& q, NFElement a) {
  for (auto& c : a.c_) c *= q;
  return a;
}

bool operator==(const NFElement& a, const NFElement& b) { return a.c_ == b.c_ && a.field_ == b.field_; }

NFElement NFElement::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
  if (c_.size() == 1) return NFElement(field_, Rational(1) / c_[0]);
  const auto eg = extended_gcd(as_poly(), field_.minpoly());
  require(eg.g.degree() == 0, ErrorKind::DivisionByZero, "element shares a factor with the minimal polynomial");
  return from_poly(field_, eg.s);
}

NFElement NFElement::pow(unsigned n) const {
  NFElement r(field_, Rational(1));
  NFElement b = *this;
  while (n > 0) {
    if (n & 1u) r *= b;
    n >>= 1u;
    if (n > 0) b *= b;
  }
  return r;
}

namespace {

template <class Done>
Interval refine_until(const NFElement& a, Done done) {
  const QPoly p = a.as_poly();
  RealRoot r = a.field().root();
  for (int step = 0; step < kMaxBisections; ++step) {
    Interval iv = eval_interval(p, r.interval);
    if (done(iv)) return iv;
    r = r.bisected();
  }
  throw Error(ErrorKind::BudgetExceeded, "interval refinement did not converge");
}

}  // namespace

int sign(const NFElement& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return sgn(a.rational_value());
  return refine_until(a, [](const Interval& iv) { return iv.certain_sign() != 0; }).certain_sign();
}

int compare(const NFElement& a, const NFElement& b) { return sign(a - b); }

Interval enclose(const NFElement& a, const Rational& max_width) {
  if (a.is_rational()) return Interval(a.rational_value());
  return refine_until(a, [&](const Interval& iv) { return iv.width() <= max_width; });
}

double approx(const NFElement& a) {
  const Rational w(Integer(1), Integer(1) << 64);
  return to_double(enclose(a, w).midpoint());
}

QPoly minimal_polynomial(const NFElement& a) {
  const std::size_t n = static_cast<std::size_t>(a.field().degree());
  std::vector<NFElement> powers{NFElement(a.field(), Rational(1))};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * a);
    QMatrix m(n, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = powers[j].coords()[i];
    const auto ker = kernel(m);
    if (ker.dim() == 0) continue;
    auto v = ker.basis().row(0);
    const Rational lead = v[k];
    for (auto& c : v) c /= lead;
    return QPoly(std::move(v));
  }
  throw Error(ErrorKind::VerificationFailed, "no linear dependency among powers");
}

QMatrix multiplication_matrix(const NFElement& a) {
  const std::size_t n = static_cast<std::size_t>(a.field().degree());
  QMatrix m(n, n);
  NFElement basis(a.field(), Rational(1));
  const NFElement theta = n == 1 ? basis : NFElement::generator(a.field());
  for (std::size_t j = 0; j < n; ++j) {
    const NFElement col = a * basis;
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coords()[i];
    basis *= theta;
  }
  return m;
}

Rational trace(const NFElement& a) { return trace(multiplication_matrix(a)); }
Rational norm(const NFElement& a) { return determinant(multiplication_matrix(a)); }

std::string to_string(const NFElement& a, const std::string& var) {
  if (a.is_rational()) return to_string(a.rational_value());
  return to_string(a.as_poly(), var);
}

ComplexAlg::ComplexAlg(NFElement re, NFElement im) : re_(std::move(re)), im_(std::move(im)) {
  require(re_.field() == im_.field(), ErrorKind::FieldMismatch, "real and imaginary parts in different fields");
}

ComplexAlg ComplexAlg::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
  const NFElement inv = norm2().inverse();
  return ComplexAlg(re_ * inv, -(im_ * inv));
}

ComplexAlg& ComplexAlg::operator+=(const ComplexAlg& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexAlg& ComplexAlg::operator-=(const ComplexAlg& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexAlg& ComplexAlg::operator*=(const ComplexAlg& o) {
  NFElement re = re_ * o.re_ - im_ * o.im_;
  NFElement im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const ComplexAlg& z, const std::string& var) {
  if (z.is_real()) return to_string(z.re(), var);
  return "(" + to_string(z.re(), var) + ")+(" + to_string(z.im(), var) + ")*i";
}

KMatrix to_field(const QMatrix& m, const NumberField& field) {
  return m.map([&](const Rational& q) { return NFElement(field, q); }, NFElement(field));
}

KPoly to_field(const QPoly& p, const NumberField& field) {
  std::vector<NFElement> c;
  for (const auto& q : p.coeffs()) c.emplace_back(field, q);
  return KPoly(std::move(c), NFElement(field));
}

std::vector<NFElement> to_field(const std::vector<Rational>& v, const NumberField& field) {
  std::vector<NFElement> r;
  r.reserve(v.size());
  for (const auto& q : v) r.emplace_back(field, q);
  return r;
}

}  // namespace holofield
