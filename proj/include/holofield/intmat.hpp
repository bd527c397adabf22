#pragma once

#include <optional>

#include "holofield/matrix.hpp"

namespace holofield {

using IntMat = Matrix<Integer>;

IntMat int_matrix(std::initializer_list<std::initializer_list<long>> rows);
QMatrix to_rational(const IntMat& m);
/// The same matrix over the integers, if every entry is integral.
std::optional<IntMat> to_integer(const QMatrix& m);

/// Fraction-free Faddeev-LeVerrier: each division by k is exact over Z.
QPoly charpoly_int(const IntMat& a);
Integer determinant_int(const IntMat& a);
/// Inverse of a unimodular matrix; nullopt when the inverse is not integral.
std::optional<IntMat> inverse_int(const IntMat& a);
bool is_unimodular(const IntMat& a);

struct SmithForm {
  IntMat s;  // diagonal, d_i | d_{i+1}, nonnegative
  IntMat u;  // unimodular, rows x rows
  IntMat v;  // unimodular, cols x cols; u * a * v == s
};

SmithForm smith_normal_form(const IntMat& a);

}  // namespace holofield
