#pragma once

#include <string>
#include <vector>

#include "holofield/poly.hpp"
#include "holofield/rational.hpp"

namespace holofield {

using ZPoly = std::vector<Integer>;

/// "x^2-3*x+1" style rendering with exact rational coefficients.
std::string to_string(const QPoly& f, const std::string& var = "x");

QPoly qpoly_from_ints(std::initializer_list<long> coeffs);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of f.
ZPoly primitive_part(const QPoly& f);
QPoly to_qpoly(const ZPoly& f);

Interval eval_interval(const QPoly& f, const Interval& x);
int sign_at(const QPoly& f, const Rational& x);

/// Cauchy bound: every complex root has absolute value below the result.
Rational root_bound(const QPoly& f);

/// Sturm chain of a square-free polynomial.
std::vector<QPoly> sturm_chain(const QPoly& f);
/// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi);
int count_roots(const QPoly& f, const Rational& lo, const Rational& hi);

/// A real root of a square-free rational polynomial, pinned by an open
/// interval (lo, hi) whose endpoints are not roots and which contains no other
/// root.
struct RealRoot {
  QPoly poly;
  Interval interval;

  /// Halve the interval until its width is at most max_width.
  RealRoot refined(const Rational& max_width) const;
  /// One bisection step.
  RealRoot bisected() const;
};

/// All real roots of f (any multiplicities), increasing, each isolated with
/// respect to the square-free part of f.
std::vector<RealRoot> isolate_real_roots(const QPoly& f);

}  // namespace holofield
