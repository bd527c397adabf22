#include "holofield/generic.hpp"

#include <algorithm>

namespace holofield {

namespace {

const NumberField& common_field(const std::vector<ExtendedPeriod>& z) {
  require(!z.empty(), ErrorKind::InvalidInput, "no periods");
  for (const auto& p : z)
    require(p.alg.field() == z[0].alg.field(), ErrorKind::FieldMismatch, "periods lie in different fields");
  return z[0].alg.field();
}

FieldEmbedding compose(const FieldEmbedding& outer, const FieldEmbedding& inner) {
  return FieldEmbedding(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

}  // namespace

AmbientModel AmbientModel::stratum(std::size_t n, int genus, std::string label) {
  const NumberField q;
  return {n, q, KSubspace(n, NFElement(q)), genus, std::move(label)};
}

bool Substituted::is_zero() const {
  return alg.is_zero() && std::all_of(trans.begin(), trans.end(), [](const auto& t) { return t.second.is_zero(); });
}

KSubspace relation_space_over(const std::vector<ExtendedPeriod>& z, const Subfield& k,
                              const std::vector<std::string>& symbols) {
  const NumberField& big = common_field(z);
  require(k.ambient() == big, ErrorKind::FieldMismatch, "k is not a subfield of the periods' field");
  for (const auto& p : z)
    for (const auto& [name, coef] : p.trans)
      require(std::find(symbols.begin(), symbols.end(), name) != symbols.end(), ErrorKind::InvalidInput,
              "undeclared transcendental symbol " + name);

  const std::size_t n = z.size(), dk = static_cast<std::size_t>(k.degree()), db = static_cast<std::size_t>(big.degree());
  std::vector<NFElement> beta;
  const NFElement gen = NFElement::generator(k.field);
  for (std::size_t a = 0; a < dk; ++a) beta.push_back(k.embedding(gen.pow(static_cast<unsigned>(a))));

  // column (j, a) expands beta_a z_j over Q-basis x {1, i} x ({1} + symbols)
  const std::size_t rows = 2 * db * (1 + symbols.size());
  QMatrix m(rows, n * dk);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t a = 0; a < dk; ++a) {
      const std::size_t col = j * dk + a;
      auto put = [&](std::size_t block, const NFElement& re, const NFElement& im) {
        for (std::size_t t = 0; t < db; ++t) {
          m(block * 2 * db + t, col) = re.coords()[t];
          m(block * 2 * db + db + t, col) = im.coords()[t];
        }
      };
      put(0, beta[a] * z[j].alg.re(), beta[a] * z[j].alg.im());
      for (std::size_t s = 0; s < symbols.size(); ++s) {
        const auto it = z[j].trans.find(symbols[s]);
        if (it == z[j].trans.end()) continue;
        put(1 + s, it->second.first * beta[a], it->second.second * beta[a]);
      }
    }

  const NFElement zero(k.field);
  std::vector<std::vector<NFElement>> rel;
  for (const auto& v : kernel(m).vectors()) {
    std::vector<NFElement> c;
    for (std::size_t j = 0; j < n; ++j)
      c.emplace_back(k.field, std::vector<Rational>(v.begin() + static_cast<long>(j * dk),
                                                    v.begin() + static_cast<long>((j + 1) * dk)));
    rel.push_back(std::move(c));
  }
  return KSubspace::span(rel, n, zero);
}

Subfield chart_holonomy_field(const std::vector<ExtendedPeriod>& z, const NumberField& field) {
  std::vector<NFElement> parts;
  for (const auto& p : z) {
    require(p.alg.field() == field, ErrorKind::FieldMismatch, "period outside the declared field");
    parts.push_back(p.alg.re());
    parts.push_back(p.alg.im());
  }
  return field_generated_by(parts, field);
}

Substituted substitute(const std::vector<ExtendedPeriod>& z, const std::vector<NFElement>& c, const Subfield& k) {
  require(c.size() == z.size(), ErrorKind::InvalidInput, "relation length does not match the periods");
  const NumberField& big = k.ambient();
  Substituted sum{ComplexAlg(big), {}};
  for (std::size_t j = 0; j < z.size(); ++j) {
    const NFElement cj = k.embedding(c[j]);
    sum.alg += cj * z[j].alg;
    for (const auto& [name, coef] : z[j].trans) {
      auto it = sum.trans.try_emplace(name, ComplexAlg(big)).first;
      it->second += cj * ComplexAlg(NFElement(big, coef.first), NFElement(big, coef.second));
    }
  }
  return sum;
}

Verdict is_typical(const std::vector<ExtendedPeriod>& z, const std::vector<std::string>& symbols,
                   const AmbientModel& m, const Subfield& hol, const Limits& limits) {
  const NumberField& big = common_field(z);
  require(hol.ambient() == big, ErrorKind::FieldMismatch, "holonomy field is not a subfield of the periods' field");
  require(z.size() == m.n, ErrorKind::InvalidInput, "period count does not match the ambient chart");
  require(m.relations.ambient_dim() == m.n, ErrorKind::InvalidInput, "relations have the wrong length");
  Verdict v;
  if (m.k_m.degree() > m.genus)
    v.warnings.push_back("k(M) has degree " + std::to_string(m.k_m.degree()) + ", above the genus " +
                         std::to_string(m.genus));
  const auto km_in_big = find_embedding(m.k_m, big);
  require(km_in_big.has_value(), ErrorKind::FieldMismatch, "k(M) does not embed in the periods' field");
  const NFElement km_gen = (*km_in_big)(NFElement::generator(m.k_m));

  for (const auto& sub : subfields(hol.field, limits.subfield_degree_cap)) {
    if (sub.degree() > m.genus) continue;
    const Subfield k = subfield_from_embedding(compose(hol.embedding, sub.embedding));
    if (!is_member(km_gen, k)) continue;
    v.checked_degrees.push_back(k.degree());
    const KSubspace found = relation_space_over(z, k, symbols);
    std::vector<std::vector<NFElement>> lifted;
    for (const auto& r : m.relations.vectors()) {
      std::vector<NFElement> c;
      for (const auto& x : r) c.push_back(to_subfield((*km_in_big)(x), k));
      lifted.push_back(std::move(c));
    }
    const KSubspace known = KSubspace::span(lifted, m.n, NFElement(k.field));
    for (const auto& r : found.vectors()) {
      if (known.contains(r)) continue;
      require(substitute(z, r, k).is_zero(), ErrorKind::VerificationFailed, "witness does not vanish on the periods");
      v.typical = false;
      v.witness = Witness{k, r};
      return v;
    }
  }
  return v;
}

Verdict is_typical(const std::vector<ExtendedPeriod>& z, const std::vector<std::string>& symbols,
                   const AmbientModel& m, const Limits& limits) {
  return is_typical(z, symbols, m, chart_holonomy_field(z, common_field(z)), limits);
}

GenericReport generic_verdict(const Verdict& v, const AmbientModel& m) {
  if (v.typical) return {"generic", m.label + "-generic (orbit closure = " + m.label + "_1)"};
  std::string k = v.witness ? v.witness->k.field.describe() : "?";
  return {"inconclusive", "inconclusive: candidate smaller orbit closure constrained by witness field " + k};
}

}  // namespace holofield
