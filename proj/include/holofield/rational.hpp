#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holofield {

using Integer = mpz_class;
using Rational = mpq_class;

// Scalar hooks used by the generic Poly/Matrix code. Number-field element
// types provide the same set in their own header.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_rational(const Rational&, const Rational& q) { return q; }

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", and decimal-free integers; throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit Interval(const Rational& point) : lo(point), hi(point) {}

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  /// Sign of every point in the interval, or 0 when the interval meets zero.
  int certain_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

double to_double(const Rational& q);

}  // namespace holofield
