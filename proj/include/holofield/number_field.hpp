#pragma once

#include <memory>
#include <string>
#include <vector>

#include "holofield/matrix.hpp"
#include "holofield/qpoly.hpp"

namespace holofield {

/// A real number field Q(theta) where theta is the unique root of a monic
/// irreducible rational polynomial inside a rational isolating interval.
/// Cheap to copy; all copies share one immutable description.
class NumberField {
 public:
  /// The rational field, represented as the degree-one field of x.
  NumberField();

  /// Validated construction: minpoly is made monic, checked irreducible and
  /// the interval must contain exactly one of its real roots.
  static NumberField create(const QPoly& minpoly, const Interval& embedding, int degree_cap = 32);
  /// Trusted construction for polynomials already known to be irreducible.
  static NumberField from_irreducible(const QPoly& minpoly, const Interval& embedding);
  static NumberField rationals() { return NumberField(); }

  int degree() const;
  bool is_rational() const { return degree() == 1; }
  const QPoly& minpoly() const;
  /// Isolating interval for the selected root; its endpoints are not roots.
  const Interval& embedding() const;
  RealRoot root() const;
  /// Reduction table: row k holds x^(n+k) mod minpoly in the power basis.
  const std::vector<std::vector<Rational>>& reduction() const;

  /// Same minimal polynomial and the same selected real root.
  friend bool operator==(const NumberField& a, const NumberField& b);

  std::string describe() const;

 private:
  struct Data;
  explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class NFElement {
 public:
  NFElement() : NFElement(NumberField()) {}
  explicit NFElement(NumberField field);
  NFElement(NumberField field, std::vector<Rational> coords);
  NFElement(NumberField field, const Rational& q);

  static NFElement generator(const NumberField& field);
  static NFElement from_poly(const NumberField& field, const QPoly& p);

  const NumberField& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant coordinate; meaningful when is_rational().
  const Rational& rational_value() const { return c_[0]; }
  QPoly as_poly() const;

  NFElement inverse() const;
  NFElement pow(unsigned n) const;

  NFElement operator-() const;
  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o) { return *this *= o.inverse(); }

  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
  friend NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }
  friend NFElement operator*(const Rational& q, NFElement a);
  friend NFElement operator+(NFElement a, const Rational& q) {
    a.c_[0] += q;
    return a;
  }
  friend NFElement operator-(NFElement a, const Rational& q) {
    a.c_[0] -= q;
    return a;
  }
  friend bool operator==(const NFElement& a, const NFElement& b);

 private:
  void check_same(const NFElement& o) const;
  NumberField field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const NFElement& x) { return x.is_zero(); }
inline NFElement zero_like(const NFElement& x) { return NFElement(x.field()); }
inline NFElement one_like(const NFElement& x) { return NFElement(x.field(), Rational(1)); }
inline NFElement from_rational(const NFElement& x, const Rational& q) { return NFElement(x.field(), q); }

/// Exact sign under the field's real embedding.
int sign(const NFElement& a);
int compare(const NFElement& a, const NFElement& b);
/// Rational interval containing a, of width at most max_width.
Interval enclose(const NFElement& a, const Rational& max_width);
double approx(const NFElement& a);

/// Monic minimal polynomial over the rationals.
QPoly minimal_polynomial(const NFElement& a);
/// Matrix of multiplication by a on the power basis (columns are images).
QMatrix multiplication_matrix(const NFElement& a);
Rational trace(const NFElement& a);
Rational norm(const NFElement& a);

std::string to_string(const NFElement& a, const std::string& var = "a");

/// Element of K[i] for a real number field K.
class ComplexAlg {
 public:
  ComplexAlg() = default;
  explicit ComplexAlg(const NumberField& field) : re_(field), im_(field) {}
  ComplexAlg(NFElement re, NFElement im);
  explicit ComplexAlg(NFElement re) : re_(re), im_(NFElement(re.field())) {}

  static ComplexAlg i(const NumberField& field) {
    return ComplexAlg(NFElement(field), NFElement(field, Rational(1)));
  }

  const NFElement& re() const { return re_; }
  const NFElement& im() const { return im_; }
  const NumberField& field() const { return re_.field(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexAlg conj() const { return ComplexAlg(re_, -im_); }
  NFElement norm2() const { return re_ * re_ + im_ * im_; }
  ComplexAlg inverse() const;

  ComplexAlg operator-() const { return ComplexAlg(-re_, -im_); }
  ComplexAlg& operator+=(const ComplexAlg& o);
  ComplexAlg& operator-=(const ComplexAlg& o);
  ComplexAlg& operator*=(const ComplexAlg& o);
  ComplexAlg& operator/=(const ComplexAlg& o) { return *this *= o.inverse(); }

  friend ComplexAlg operator+(ComplexAlg a, const ComplexAlg& b) { return a += b; }
  friend ComplexAlg operator-(ComplexAlg a, const ComplexAlg& b) { return a -= b; }
  friend ComplexAlg operator*(ComplexAlg a, const ComplexAlg& b) { return a *= b; }
  friend ComplexAlg operator/(ComplexAlg a, const ComplexAlg& b) { return a /= b; }
  friend ComplexAlg operator*(const NFElement& s, const ComplexAlg& a) { return ComplexAlg(s * a.re_, s * a.im_); }
  friend bool operator==(const ComplexAlg& a, const ComplexAlg& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  NFElement re_;
  NFElement im_;
};

inline bool is_zero(const ComplexAlg& x) { return x.is_zero(); }
inline ComplexAlg zero_like(const ComplexAlg& x) { return ComplexAlg(x.field()); }
inline ComplexAlg one_like(const ComplexAlg& x) { return ComplexAlg(NFElement(x.field(), Rational(1))); }
inline ComplexAlg from_rational(const ComplexAlg& x, const Rational& q) { return ComplexAlg(NFElement(x.field(), q)); }

std::string to_string(const ComplexAlg& z, const std::string& var = "a");

using KPoly = Poly<NFElement>;
using KMatrix = Matrix<NFElement>;
using KSubspace = Subspace<NFElement>;
using CMatrix = Matrix<ComplexAlg>;
using CSubspace = Subspace<ComplexAlg>;

/// Lift rational data into a number field.
KMatrix to_field(const QMatrix& m, const NumberField& field);
KPoly to_field(const QPoly& p, const NumberField& field);
std::vector<NFElement> to_field(const std::vector<Rational>& v, const NumberField& field);

}  // namespace holofield
