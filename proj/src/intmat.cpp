#include "holofield/intmat.hpp"

namespace holofield {

IntMat int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, ErrorKind::InvalidInput, "ragged integer matrix");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

QMatrix to_rational(const IntMat& m) {
  return m.map([](const Integer& z) { return Rational(z); }, Rational(0));
}

std::optional<IntMat> to_integer(const QMatrix& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

QPoly charpoly_int(const IntMat& a) {
  require(a.is_square(), ErrorKind::InvalidInput, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  const IntMat id = IntMat::identity(n, Integer(0));
  IntMat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    Integer t = trace(a * m);
    c[n - k] = -t / static_cast<long>(k);
  }
  std::vector<Rational> q;
  for (const auto& z : c) q.emplace_back(z);
  return QPoly(std::move(q));
}

Integer determinant_int(const IntMat& a) {
  require(a.is_square(), ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMat& a) {
  if (!a.is_square()) return false;
  const Integer d = determinant_int(a);
  return d == 1 || d == -1;
}

std::optional<IntMat> inverse_int(const IntMat& a) {
  const auto inv = inverse(to_rational(a));
  if (!inv) return std::nullopt;
  return to_integer(*inv);
}

namespace {

struct SmithWork {
  IntMat a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row i -= q * row j
  void row_sub(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= q * u(j, c);
  }
  // col i -= q * col j
  void col_sub(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= q * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!found || abs(a(i, j)) < abs(a(bi, bj))) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& input) {
  SmithWork w{input, IntMat::identity(input.rows(), Integer(0)), IntMat::identity(input.cols(), Integer(0))};
  const std::size_t steps = std::min(input.rows(), input.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    if (!w.place_pivot(t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
        if (w.a(i, t) == 0) continue;
        w.row_sub(i, t, floor_div(w.a(i, t), w.a(t, t)));
        if (w.a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
        if (w.a(t, j) == 0) continue;
        w.col_sub(j, t, floor_div(w.a(t, j), w.a(t, t)));
        if (w.a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        w.place_pivot(t);
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < w.a.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
          Integer r;
          mpz_tdiv_r(r.get_mpz_t(), w.a(i, j).get_mpz_t(), w.a(t, t).get_mpz_t());
          if (r != 0) {
            w.row_sub(t, i, Integer(-1));
            fixed = false;
            break;
          }
        }
      if (fixed) break;
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }
  return {std::move(w.a), std::move(w.u), std::move(w.v)};
}

}  // namespace holofield
