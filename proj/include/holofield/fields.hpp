#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "holofield/number_field.hpp"

namespace holofield {

inline constexpr int kInternalFactorDegreeCap = 64;
inline constexpr int kDefaultSubfieldDegreeCap = 6;

struct KFactor {
  KPoly factor;  // monic, irreducible over the coefficient field
  int multiplicity;
};

/// Trager's algorithm: shift until the norm is square-free, factor the norm
/// over Q and pull each factor back with a gcd over K.
std::vector<KFactor> factor_over_K(const KPoly& f, int degree_cap = kInternalFactorDegreeCap);

/// Norm over Q of a monic K-polynomial (characteristic polynomial of
/// multiplication by x on K[x]/(g) viewed as a Q-vector space).
QPoly norm_poly(const KPoly& g);

/// Q-linear field homomorphism source -> target, stored as the matrix whose
/// column j is the image of theta_source^j.
class FieldEmbedding {
 public:
  FieldEmbedding(NumberField source, NumberField target, QMatrix matrix);
  static FieldEmbedding identity(const NumberField& field);
  static FieldEmbedding from_rationals(const NumberField& target);
  /// The embedding sending the source generator to image.
  static FieldEmbedding from_generator_image(const NumberField& source, const NFElement& image);

  const NumberField& source() const { return source_; }
  const NumberField& target() const { return target_; }
  const QMatrix& matrix() const { return m_; }

  NFElement operator()(const NFElement& a) const;
  /// Source element mapping to a, when a lies in the image.
  std::optional<NFElement> preimage(const NFElement& a) const;
  QSubspace image() const;

 private:
  NumberField source_;
  NumberField target_;
  QMatrix m_;
};

/// The embedding of `from` into `into` compatible with both real embeddings,
/// if one exists.
std::optional<FieldEmbedding> find_embedding(const NumberField& from, const NumberField& into,
                                             int degree_cap = kInternalFactorDegreeCap);

/// Pick the isolated real root of an irreducible polynomial whose value is
/// enclosed by enclosure(width) for small enough widths.
RealRoot select_root(const QPoly& irreducible, const std::function<Interval(const Rational&)>& enclosure);

/// Q(a) as a standalone field, generated by a itself.
NumberField field_of_element(const NFElement& a);

struct Compositum {
  NumberField field;
  FieldEmbedding first;
  FieldEmbedding second;
};

Compositum field_join(const NumberField& k1, const NumberField& k2);

/// A subfield of an ambient field: its own presentation, the embedding into
/// the ambient, and its Q-span in ambient power-basis coordinates.
struct Subfield {
  NumberField field;
  FieldEmbedding embedding;
  QSubspace span;

  int degree() const { return field.degree(); }
  const NumberField& ambient() const { return embedding.target(); }
  friend bool operator==(const Subfield& a, const Subfield& b) { return a.span == b.span; }
};

Subfield whole_field(const NumberField& ambient);
Subfield rational_subfield(const NumberField& ambient);
Subfield subfield_from_embedding(const FieldEmbedding& e);
/// The span must be closed under multiplication and contain 1.
Subfield subfield_from_span(const QSubspace& span, const NumberField& ambient);

bool is_member(const NFElement& a, const Subfield& k);
/// Coordinates of a in k's own presentation; a must be a member.
NFElement to_subfield(const NFElement& a, const Subfield& k);

Subfield field_generated_by(const std::vector<NFElement>& elements, const NumberField& ambient);
Subfield intersect_subfields(const Subfield& a, const Subfield& b);

NumberField field_intersect(const NumberField& k1, const NumberField& k2);

/// Every subfield of K, ordered by degree. Throws DegreeLimitExceeded when
/// deg K exceeds degree_cap.
std::vector<Subfield> subfields(const NumberField& field, int degree_cap = kDefaultSubfieldDegreeCap);

/// All real embeddings of the field, the identity first; each is given by the
/// isolated real root that the generator is sent to.
std::vector<RealRoot> real_embeddings(const NumberField& field);

}  // namespace holofield
