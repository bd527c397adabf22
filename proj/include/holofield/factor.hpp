#pragma once

#include <vector>

#include "holofield/qpoly.hpp"

namespace holofield {

inline constexpr int kDefaultFactorDegreeCap = 32;

struct QFactor {
  QPoly factor;  // monic, irreducible over the rationals
  int multiplicity;
};

/// Complete factorization over the rationals: square-free decomposition,
/// factorization modulo a small prime, Hensel lifting and recombination.
/// Factors are monic, ordered by degree and then lexicographically by
/// coefficients, so f == lc(f) * prod(factor^multiplicity) exactly.
/// Throws DegreeLimitExceeded when deg f exceeds degree_cap.
std::vector<QFactor> factor_over_Q(const QPoly& f, int degree_cap = kDefaultFactorDegreeCap);

bool is_irreducible_over_Q(const QPoly& f, int degree_cap = kDefaultFactorDegreeCap);

}  // namespace holofield
