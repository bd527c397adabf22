#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holofield/fields.hpp"
#include "holofield/intmat.hpp"
#include "holofield/limits.hpp"
#include "holofield/surface.hpp"

namespace holofield {

struct Representation {
  std::size_t dim = 0;
  std::vector<IntMat> generators;
  std::vector<std::string> labels;

  /// Checks shapes and unimodularity; labels default to g1, g2, ...
  static Representation make(std::size_t dim, std::vector<IntMat> generators, std::vector<std::string> labels = {});
  std::vector<IntMat> inverses() const;
};

struct PerronData {
  NumberField field;  // Q(lambda)
  NFElement lambda;
  std::vector<NFElement> eigvec{};
  QPoly factor{};  // irreducible factor of the characteristic polynomial vanishing at lambda
};

/// The real eigenvalue of strictly largest modulus, certified simple and
/// dominant over every complex eigenvalue. Errors: NotSimple.
PerronData perron_root(const IntMat& a, const Limits& limits = {});

/// Minimal polynomial of lambda over the subfield k of lambda's field, with
/// coefficients in k's own presentation.
KPoly min_poly_over(const NFElement& lambda, const Subfield& k);

/// Projection onto ker g(A) along the complementary primary component.
/// Errors: NotADivisor, NotCoprime.
KMatrix primary_projection(const KMatrix& a, const KPoly& g);
KMatrix primary_projection(const IntMat& a, const KPoly& g);

KSubspace orbit_span(const Representation& r, const std::vector<NFElement>& v);
/// Invariant complement W with U + W direct and equal to the ambient.
/// Errors: NotInvariant, NoComplement.
KSubspace invariant_complement(const Representation& r, const KSubspace& u);

/// Matrix of the restriction of an integer matrix to an invariant subspace,
/// in the subspace's RREF basis. Errors: NotInvariant.
KMatrix restrict_to(const IntMat& g, const KSubspace& v);

/// Field generated by traces of words in the generators and their inverses,
/// restricted to v. Errors: NotInvariant.
Subfield trace_field(const Representation& r, const KSubspace& v, const Limits& limits = {});
Subfield trace_field(const Representation& r, const Limits& limits = {});

struct ConjugatePiece {
  NumberField field;  // k with the conjugate real embedding
  KSubspace space;    // RREF entries as elements of field
  std::string label;
};

struct Decomposition {
  PerronData perron;
  KSubspace v_id;                  // over Q(lambda)
  Subfield k;                      // subfield of Q(lambda)
  std::vector<ConjugatePiece> pieces{};  // identity embedding first
  QSubspace sum{0, Rational(0)};          // direct sum of the pieces, defined over Q
  QSubspace w{0, Rational(0)};
  bool multiplicity_one = false;   // lambda is not an eigenvalue of A_pa on W
};

/// Errors: NotSimple, NoComplement, TraceFieldMismatch, Unsupported (non-real conjugates).
Decomposition isotypic_decomposition(const Representation& r, const IntMat& a_pa, const Limits& limits = {});

struct BlockStructure {
  int power = 1;
  QSubspace ker_p{0, Rational(0)};
  QMatrix absolute{};  // induced action on absolute coordinates
  QMatrix off_diagonal{};
  QPoly charpoly_power{};
  QPoly charpoly_absolute{};
};

/// proj is the 2g x n matrix from relative to absolute coordinates.
/// Errors: NotBlockTriangular.
BlockStructure relative_block_structure(const IntMat& a_rel, const IntMat& proj, int bound = 24);
BlockStructure relative_block_structure(const IntMat& a_rel, const HomologyData& h, int bound = 24);
/// Synthetic chart: the first `kernel_dim` coordinates span ker p.
IntMat kernel_first_projection(std::size_t n, std::size_t kernel_dim);

bool dimension_inequality_check(std::size_t dim, int degree, int genus);
bool dimension_inequality_check(const Decomposition& d, int genus);

}  // namespace holofield
