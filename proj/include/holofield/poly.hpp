#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "holofield/error.hpp"
#include "holofield/rational.hpp"

namespace holofield {

namespace detail {
template <class T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over a field-like scalar T; coefficient i
/// multiplies x^i and trailing zeros are always stripped, so the zero
/// polynomial has no coefficients. A zero element of T is carried along so
/// that scalars needing a field handle (number-field elements) can still
/// produce constants for an empty polynomial.
template <class T>
class Poly {
 public:
  Poly()
    requires std::default_initializable<T>
      : zero_(zero_like(T())) {}
  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(std::vector<T> coeffs, T zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }
  Poly(std::vector<T> coeffs)
    requires std::default_initializable<T>
      : c_(std::move(coeffs)), zero_(c_.empty() ? zero_like(T()) : zero_like(c_.front())) {
    trim();
  }

  static Poly constant(const T& value) { return Poly({value}, zero_like(value)); }
  /// x^n with coefficient value.
  static Poly monomial(const T& value, std::size_t n) {
    std::vector<T> c(n + 1, zero_like(value));
    c[n] = value;
    return Poly(std::move(c), zero_like(value));
  }
  static Poly x(const T& zero) { return monomial(one_like(zero), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  const T& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& leading() const { return c_.empty() ? zero_ : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == one_like(zero_); }

  Poly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(-a);
    return Poly(std::move(r), zero_);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return Poly(std::move(r), a.zero_);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return Poly(std::move(r), a.zero_);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r), a.zero_);
  }
  friend Poly operator*(const T& s, const Poly& a) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(s * c);
    return Poly(std::move(r), a.zero_);
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    require(!d.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly rem = *this;
    if (degree() < d.degree()) return {Poly(zero_), rem};
    std::vector<T> q(c_.size() - d.c_.size() + 1, zero_);
    const T inv_lead = one_like(zero_) / d.leading();
    const std::size_t dn = d.c_.size() - 1;
    std::vector<T>& r = rem.c_;
    for (std::size_t k = q.size(); k-- > 0;) {
      T coef = r[k + dn] * inv_lead;
      if (detail::scalar_is_zero(coef)) continue;
      for (std::size_t j = 0; j <= dn; ++j) r[k + j] -= coef * d.c_[j];
      q[k] = coef;
    }
    rem.trim();
    return {Poly(std::move(q), zero_), std::move(rem)};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    const T inv = one_like(zero_) / leading();
    return inv * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(zero_);
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.push_back(from_rational(zero_, Rational(static_cast<long>(i))) * c_[i]);
    }
    return Poly(std::move(r), zero_);
  }

  /// Horner evaluation at any value U that T multiplies into.
  template <class U>
  U eval(const U& x, U acc) const {
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x, zero_); }

  /// Composition this(inner).
  Poly compose(const Poly& inner) const {
    Poly acc(zero_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(c_[i]);
    return acc;
  }

  /// Coefficient-wise image under a scalar map (e.g. a field embedding).
  template <class F>
  auto map(F&& f, const decltype(f(std::declval<const T&>()))& new_zero) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(f(a));
    return Poly<U>(std::move(r), new_zero);
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
  T zero_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
struct ExtendedGcd {
  Poly<T> g;  // monic
  Poly<T> s;
  Poly<T> t;  // s*a + t*b == g
};

template <class T>
ExtendedGcd<T> extended_gcd(const Poly<T>& a, const Poly<T>& b) {
  require(!(a.is_zero() && b.is_zero()), ErrorKind::InvalidInput, "extended gcd of two zero polynomials");
  const T zero = a.zero();
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(one_like(zero)), s1(zero);
  Poly<T> t0(zero), t1 = Poly<T>::constant(one_like(zero));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<T> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const T inv = one_like(zero) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

/// Yun's square-free decomposition over a characteristic-zero field:
/// returns (part, multiplicity) with monic, pairwise coprime, square-free parts.
template <class T>
std::vector<std::pair<Poly<T>, int>> square_free_decomposition(const Poly<T>& f) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (f.degree() < 1) return out;
  Poly<T> a = f.monic();
  Poly<T> da = a.derivative();
  Poly<T> g = gcd(a, da);
  Poly<T> b = a / g;
  Poly<T> c = da / g;
  Poly<T> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<T> h = gcd(b, d);
    if (h.degree() > 0) out.emplace_back(h, i);
    b = b / h;
    c = d / h;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

using QPoly = Poly<Rational>;

}  // namespace holofield
