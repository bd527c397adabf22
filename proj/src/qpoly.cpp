#include "holofield/qpoly.hpp"

#include <functional>

namespace holofield {

std::string to_string(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      out += to_string(mag);
      if (i > 0) out += "*";
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

QPoly qpoly_from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, Integer(c.get_den()));
  ZPoly z;
  z.reserve(f.coeffs().size());
  Integer content = 0;
  for (const auto& c : f.coeffs()) {
    Rational scaled = c * den;
    z.push_back(scaled.get_num());
    content = gcd(content, z.back());
  }
  if (sgn(z.back()) < 0) content = -content;
  for (auto& c : z) c /= content;
  return z;
}

QPoly to_qpoly(const ZPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.size());
  for (const auto& z : f) c.emplace_back(z);
  return QPoly(std::move(c));
}

Interval eval_interval(const QPoly& f, const Interval& x) {
  Interval acc(Rational(0));
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + Interval(f[i]);
  return acc;
}

int sign_at(const QPoly& f, const Rational& x) { return sgn(f(x)); }

Rational root_bound(const QPoly& f) {
  Rational m = 0;
  const Rational& lead = f.leading();
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = abs(f[static_cast<std::size_t>(i)] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

QPoly square_free_part(const QPoly& f) {
  QPoly g = gcd(f, f.derivative());
  return (f / g).monic();
}

}  // namespace

int count_roots(const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_roots(const QPoly& f, const Rational& lo, const Rational& hi) {
  if (f.degree() < 1) return 0;
  return count_roots(sturm_chain(square_free_part(f)), lo, hi);
}

RealRoot RealRoot::bisected() const {
  const Rational mid = interval.midpoint();
  const int sm = sign_at(poly, mid);
  if (sm == 0) {
    const Rational quarter = interval.width() / 4;
    return {poly, Interval(mid - quarter, mid + quarter)};
  }
  if (sign_at(poly, interval.lo) != sm) return {poly, Interval(interval.lo, mid)};
  return {poly, Interval(mid, interval.hi)};
}

RealRoot RealRoot::refined(const Rational& max_width) const {
  RealRoot r = *this;
  while (r.interval.width() > max_width) r = r.bisected();
  return r;
}

std::vector<RealRoot> isolate_real_roots(const QPoly& f) {
  std::vector<RealRoot> roots;
  if (f.degree() < 1) return roots;
  const QPoly g = square_free_part(f);
  const auto chain = sturm_chain(g);
  const Rational bound = root_bound(g);

  std::function<void(const Rational&, const Rational&, int)> split =
      [&](const Rational& lo, const Rational& hi, int n) {
        if (n == 0) return;
        if (n == 1) {
          roots.push_back({g, Interval(lo, hi)});
          return;
        }
        Rational mid = (lo + hi) / 2;
        while (sign_at(g, mid) == 0) mid = (mid + hi) / 2;
        const int left = count_roots(chain, lo, mid);
        split(lo, mid, left);
        split(mid, hi, n - left);
      };
  split(-bound, bound, count_roots(chain, -bound, bound));
  return roots;
}

}  // namespace holofield
