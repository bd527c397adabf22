#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <random>

#include "holofield/factor.hpp"

namespace holofield {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomials over Z/p, p an odd prime below 2^31.

using ModPoly = std::vector<std::int64_t>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mreduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t minv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mreduce(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mreduce(t, p);
}

ModPoly msub(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::int64_t x = i < a.size() ? a[i] : 0;
    const std::int64_t y = i < b.size() ? b[i] : 0;
    r[i] = mreduce(x - y, p);
  }
  mtrim(r);
  return r;
}

ModPoly madd(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::int64_t x = i < a.size() ? a[i] : 0;
    const std::int64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  mtrim(r);
  return r;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mdivmod(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (a.size() < b.size()) return {{}, a};
  const std::int64_t inv = minv(b.back(), p);
  ModPoly q(a.size() - b.size() + 1, 0);
  const std::size_t bn = b.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t c = a[k + bn] * inv % p;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= bn; ++j) a[k + j] = mreduce(a[k + j] - c * b[j], p);
  }
  mtrim(a);
  mtrim(q);
  return {q, a};
}

ModPoly mrem(const ModPoly& a, const ModPoly& b, std::int64_t p) { return mdivmod(a, b, p).second; }

ModPoly mmonic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  const std::int64_t inv = minv(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly mgcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(std::move(a), p);
}

/// s*a + t*b == 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mbezout(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::int64_t inv = minv(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly mderiv(const ModPoly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
  mtrim(r);
  return r;
}

ModPoly mpowmod(ModPoly base, const Integer& e, const ModPoly& mod, std::int64_t p) {
  ModPoly result{1};
  base = mrem(base, mod, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mrem(mmul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mrem(mmul(result, base, p), mod, p);
  }
  return result;
}

ModPoly to_mod(const ZPoly& f, std::int64_t p) {
  ModPoly r(f.size());
  const Integer pz(static_cast<long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer v = f[i] % pz;
    if (sgn(v) < 0) v += pz;
    r[i] = v.get_si();
  }
  mtrim(r);
  return r;
}

/// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, std::int64_t p) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer pz(static_cast<long>(p));
  for (int d = 1; static_cast<int>(f.size()) - 1 >= 2 * d; ++d) {
    h = mpowmod(h, pz, f, p);
    ModPoly g = mgcd(msub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = mdivmod(f, g, p).first;
      h = mrem(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const ModPoly& f, int d, std::int64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e = 1;
  for (int i = 0; i < d; ++i) e *= static_cast<long>(p);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coin(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coin(rng);
    mtrim(a);
    if (a.size() <= 1) continue;
    ModPoly g = mgcd(a, f, p);
    if (g.size() <= 1) {
      ModPoly b = mpowmod(a, e, f, p);
      g = mgcd(msub(b, ModPoly{1}, p), f, p);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(mdivmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& f_monic, std::int64_t p) {
  std::mt19937_64 rng(0x5eed + static_cast<std::uint64_t>(p));
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(f_monic, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_small_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m = p^k.

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (sgn(c) < 0) c += m;
  }
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zreduce(r, m);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t j = 0; j < b.size(); ++j) r[j] -= b[j];
  zreduce(r, m);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (sgn(c) < 0) c += m;
    if (c > half) c -= m;
  }
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  return a;
}

/// Lift F == G0*H0 (mod p), all monic, to F == G*H (mod p^k).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const ModPoly& g0, const ModPoly& h0, std::int64_t p, int k) {
  const auto [s, t] = mbezout(g0, h0, p);
  ZPoly G = from_mod(g0), H = from_mod(h0);
  const Integer pz(static_cast<long>(p));
  Integer pj = pz;
  for (int j = 1; j < k; ++j) {
    const Integer next = pj * pz;
    ZPoly e = zsub(F, zmul(G, H, next), next);
    for (auto& c : e) c /= pj;
    const ModPoly em = to_mod(e, p);
    const auto [q, r] = mdivmod(mmul(t, em, p), g0, p);
    const ModPoly sigma = madd(mmul(s, em, p), mmul(q, h0, p), p);
    const ModPoly& tau = r;
    G.resize(std::max(G.size(), tau.size()), Integer(0));
    for (std::size_t i = 0; i < tau.size(); ++i) G[i] += pj * static_cast<long>(tau[i]);
    H.resize(std::max(H.size(), sigma.size()), Integer(0));
    for (std::size_t i = 0; i < sigma.size(); ++i) H[i] += pj * static_cast<long>(sigma[i]);
    zreduce(G, next);
    zreduce(H, next);
    pj = next;
  }
  return {G, H};
}

void hensel_all(const ZPoly& F, const std::vector<ModPoly>& factors, std::size_t lo, std::size_t hi,
                std::int64_t p, int k, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  const std::size_t mid = (lo + hi) / 2;
  ModPoly g0{1}, h0{1};
  for (std::size_t i = lo; i < mid; ++i) g0 = mmul(g0, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i) h0 = mmul(h0, factors[i], p);
  const auto [G, H] = hensel_pair(F, g0, h0, p, k);
  hensel_all(G, factors, lo, mid, p, k, out);
  hensel_all(H, factors, mid, hi, p, k, out);
}

/// Exact division over Z of primitive polynomials; empty optional when b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = to_qpoly(a).divmod(to_qpoly(b));
  if (!r.is_zero()) return std::nullopt;
  ZPoly out;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

ZPoly zprimitive(ZPoly a) {
  Integer content = 0;
  for (const auto& c : a) content = gcd(content, c);
  if (sgn(a.back()) < 0) content = -content;
  for (auto& c : a) c /= content;
  return a;
}

bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t d = pick.size();
  for (std::size_t i = d; i-- > 0;) {
    if (pick[i] < n - d + i) {
      ++pick[i];
      for (std::size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Factor a primitive square-free integer polynomial of degree >= 1.
std::vector<ZPoly> factor_square_free(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Pick among the first few usable primes the one with the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int usable = 0;
  for (std::int64_t p = 3; usable < 5; p += 2) {
    if (!is_small_prime(p)) continue;
    if (sgn(f.back() % Integer(static_cast<long>(p))) == 0) continue;
    const ModPoly fm = mmonic(to_mod(f, p), p);
    if (mgcd(fm, mderiv(fm, p), p).size() > 1) continue;
    ++usable;
    auto fac = factor_mod_p(fm, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {f};
  }
  const std::int64_t p = best_p;

  // Coefficients of lc(f)*g for any factor g are below |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = abs(f.back()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound = 2 * bound + 1;
  int k = 1;
  Integer modulus(static_cast<long>(p));
  while (modulus <= bound) {
    modulus *= static_cast<long>(p);
    ++k;
  }

  Integer lc_inv;
  const Integer lc_mod = f.back() % modulus;
  mpz_invert(lc_inv.get_mpz_t(), lc_mod.get_mpz_t(), modulus.get_mpz_t());
  ZPoly F = f;
  for (auto& c : F) c *= lc_inv;
  zreduce(F, modulus);

  std::vector<ZPoly> lifted;
  hensel_all(F, best, 0, best.size(), p, k, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::size_t d = 1;
  while (2 * d <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      ZPoly candidate{rest.back()};
      for (std::size_t i : pick) candidate = zmul(candidate, lifted[remaining[i]], modulus);
      candidate = symmetric(candidate, modulus);
      if (!candidate.empty() && candidate.size() > 1) {
        ZPoly h = zprimitive(candidate);
        if (auto q = zdivide(rest, h)) {
          result.push_back(h);
          rest = zprimitive(*q);
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      if (!next_combination(pick, remaining.size())) break;
    }
    if (!found) ++d;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

}  // namespace

std::vector<QFactor> factor_over_Q(const QPoly& f, int degree_cap) {
  require(!f.is_zero(), ErrorKind::InvalidInput, "cannot factor the zero polynomial");
  require(f.degree() <= degree_cap, ErrorKind::DegreeLimitExceeded,
          "degree " + std::to_string(f.degree()) + " exceeds factorization cap " + std::to_string(degree_cap));
  std::vector<QFactor> out;
  for (const auto& [part, mult] : square_free_decomposition(f)) {
    for (const auto& z : factor_square_free(primitive_part(part))) {
      out.push_back({to_qpoly(z).monic(), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible_over_Q(const QPoly& f, int degree_cap) {
  if (f.degree() < 1) return false;
  const auto fac = factor_over_Q(f, degree_cap);
  return fac.size() == 1 && fac[0].multiplicity == 1;
}

}  // namespace holofield
