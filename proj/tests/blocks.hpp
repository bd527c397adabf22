#pragma once

#include <random>
#include <utility>
#include <vector>

#include "holofield/intmat.hpp"
#include "holofield/monodromy.hpp"

namespace fixtures {

using namespace holofield;

inline IntMat block_diag(const std::vector<IntMat>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMat out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

/// Product of random elementary operations with entries in [-2, 2].
inline IntMat random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12) {
  std::uniform_int_distribution<long> coef(-2, 2);
  IntMat t = IntMat::identity(n, Integer(0));
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    const long c = coef(rng);
    for (std::size_t j = 0; j < n; ++j) t(a, j) += c * t(b, j);
  }
  return t;
}

inline IntMat conjugate(const IntMat& a, const IntMat& t) { return t * a * *inverse_int(t); }

/// Integer matrix of a 2x2 matrix over Z[w] acting on Z[w]^2 = Z^4, where
/// entries are pairs (x0, x1) meaning x0 + x1 w and mw is multiplication by w.
inline IntMat restrict_scalars(const std::vector<std::vector<std::pair<long, long>>>& m, const IntMat& mw) {
  const std::size_t n = m.size();
  IntMat out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q)
          out(2 * i + p, 2 * j + q) = (p == q ? m[i][j].first : 0) + m[i][j].second * mw(p, q);
  return out;
}

inline IntMat golden_mult() { return int_matrix({{0, 1}, {1, 1}}); }

struct GoldenFixture {
  Representation rep;
  IntMat pa;
  IntMat t;  // conjugator; planted pieces are spans of its columns
};

/// Z[phi]^2 with U = [[1, phi], [0, 1]] and L = [[1, 0], [phi, 1]], plus a
/// rational rotation block, conjugated by a random unimodular matrix.
inline GoldenFixture golden_fixture(std::mt19937_64& rng) {
  const IntMat u = restrict_scalars({{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}, golden_mult());
  const IntMat l = restrict_scalars({{{1, 0}, {0, 0}}, {{0, 1}, {1, 0}}}, golden_mult());
  const IntMat g1 = block_diag({u, int_matrix({{0, -1}, {1, 0}})});
  const IntMat g2 = block_diag({l, int_matrix({{0, 1}, {-1, 0}})});
  const IntMat t = random_unimodular(6, rng);
  const IntMat c1 = conjugate(g1, t), c2 = conjugate(g2, t);
  return {Representation::make(6, {c1, c2}), c1 * c2, t};
}

inline QSubspace column_span(const IntMat& t, std::size_t from, std::size_t to) {
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = from; j < to; ++j) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < t.rows(); ++i) c.emplace_back(t(i, j));
    cols.push_back(std::move(c));
  }
  return QSubspace::span(cols, t.rows(), Rational(0));
}

}  // namespace fixtures
