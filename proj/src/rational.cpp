#include "holofield/rational.hpp"

#include <algorithm>
#include <cctype>

#include "holofield/error.hpp"

namespace holofield {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::BadInterval: return "BadInterval";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeLimitExceeded: return "DegreeLimitExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadGluing: return "BadGluing";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonPolygon: return "NonPolygon";
    case ErrorKind::Intransitive: return "Intransitive";
    case ErrorKind::DegeneratePeriods: return "DegeneratePeriods";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NoComplement: return "NoComplement";
    case ErrorKind::TraceFieldMismatch: return "TraceFieldMismatch";
    case ErrorKind::NotBlockTriangular: return "NotBlockTriangular";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  require(is_integer_literal(text), ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  return Integer(strip_plus(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  require(is_integer_literal(den_text) && den_text[0] != '-', ErrorKind::InvalidInput,
          "bad denominator in '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  require(sgn(den) != 0, ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{p[0], p[0]};
  for (const auto& v : p) {
    if (v < r.lo) r.lo = v;
    if (v > r.hi) r.hi = v;
  }
  return r;
}

Interval operator*(const Rational& s, const Interval& a) {
  if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace holofield
