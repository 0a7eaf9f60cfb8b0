#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resweil/factor.hpp"
#include "resweil/groebner.hpp"
#include "resweil/linalg.hpp"
#include "resweil/mpoly.hpp"

namespace resweil {

/// A finite algebra k[t_1..t_n]/I presented by relations, with its reduced
/// Groebner basis and standard-monomial basis e_1 = 1, e_2, ... cached at
/// construction. Copies share the immutable data.
class AlgebraPresentation {
 public:
  AlgebraPresentation(RingPtr ring, std::vector<MPoly> relations);
  /// Trusts `gb` to be the reduced Groebner basis of `relations`.
  AlgebraPresentation(RingPtr ring, std::vector<MPoly> relations, GroebnerBasis gb);

  static AlgebraPresentation make(const Field& field, std::vector<std::string> vars, std::vector<MPoly> relations);

  const RingPtr& ring() const { return d_->ring; }
  const Field& field() const { return d_->ring->field(); }
  const std::vector<MPoly>& relations() const { return d_->relations; }
  const GroebnerBasis& groebner() const { return d_->gb; }

  bool is_finite() const { return d_->basis.has_value(); }
  bool is_zero_ring() const { return d_->gb.is_unit(); }
  /// Throws NotFinite for positive-dimensional presentations.
  std::size_t dimension() const { return basis().size(); }
  const std::vector<Monomial>& basis() const;
  MPoly basis_element(std::size_t b) const;

  MPoly normal_form(const MPoly& f) const { return d_->gb.normal_form(f); }
  /// Coordinates of the normal form of f (same ring) in the standard basis.
  Vec coordinates(const MPoly& f) const;
  MPoly from_coordinates(const Vec& v) const;

 private:
  struct Data {
    RingPtr ring;
    std::vector<MPoly> relations;
    GroebnerBasis gb;
    std::optional<std::vector<Monomial>> basis;
    std::map<Monomial, std::size_t, MonomialLess> index;
  };
  static std::shared_ptr<const Data> build(RingPtr ring, std::vector<MPoly> relations, GroebnerBasis gb);
  std::shared_ptr<const Data> d_;
};

struct DimensionAndBasis {
  std::size_t dimension;
  std::vector<Monomial> basis;
};
DimensionAndBasis dimension_and_basis(const AlgebraPresentation& a);

/// Structure constants of a finite algebra; elements are coordinate vectors
/// in the standard basis.
class AlgebraArith {
 public:
  explicit AlgebraArith(const AlgebraPresentation& a);

  const AlgebraPresentation& algebra() const { return a_; }
  const Field& field() const { return a_.field(); }
  std::size_t dimension() const { return dim_; }

  Vec zero() const { return Vec(dim_); }
  Vec one() const;
  Vec constant(const FieldElement& c) const;
  /// Image of the i-th generator t_i.
  Vec generator(std::size_t i) const;
  Vec from_poly(const MPoly& f) const { return a_.coordinates(f); }

  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(const Vec& x, const FieldElement& c) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec pow(Vec x, std::uint64_t e) const;
  bool is_zero(const Vec& x) const { return is_zero_vec(field(), x); }

  Matrix mult_matrix(const Vec& x) const;
  /// x^{-1} when x is a unit.
  std::optional<Vec> inverse(const Vec& x) const;
  bool is_unit(const Vec& x) const { return inverse(x).has_value(); }

  /// x -> x^q with q = |field|, a field-linear ring endomorphism.
  Matrix frobenius_matrix() const;

  /// Evaluates f (any ring, coefficients in a subfield of the algebra's
  /// field) at algebra elements, one per variable of f.
  Vec evaluate(const MPoly& f, std::span<const Vec> values) const;

  /// Polynomial in one algebra element, with x^0 taken to be `unit`.
  Vec evaluate(const UniPoly& u, const Vec& x, const Vec& unit) const;

 private:
  AlgebraPresentation a_;
  std::size_t dim_;
  // table_[i * dim + j] = e_i * e_j
  std::vector<Vec> table_;
};

/// Algebra homomorphism given by generator images (normal forms in target).
struct AlgebraHom {
  AlgebraPresentation source;
  AlgebraPresentation target;
  std::vector<MPoly> images;

  /// Image of a polynomial in the source ring, reduced in the target.
  MPoly apply(const MPoly& f) const;
  /// Every source relation maps to zero.
  bool is_well_defined() const;
};

/// A ⊗_k K: the same presentation read over an extension K.
AlgebraPresentation tensor_extend(const AlgebraPresentation& a, const Field& k);

struct LocalFactor {
  /// A / (1 - idempotent), on the parent's generators.
  AlgebraPresentation algebra;
  /// Primitive idempotent, as a normal form in the parent.
  MPoly idempotent;
  /// Degree of the residue field over the base field.
  unsigned residue_degree = 0;
  std::size_t dimension = 0;
  AlgebraHom projection;
};

/// Splits a nonzero finite algebra into local factors A = prod A e_i.
/// Throws ZeroRing, NotFinite. Factors are sorted by idempotent coordinates,
/// so the result does not depend on the seed.
std::vector<LocalFactor> decompose_local(const AlgebraPresentation& a, std::uint64_t seed = kDefaultSeed);

/// Number of local factors, computed independently as dim ker(Frob_q - 1).
std::size_t count_local_factors(const AlgebraPresentation& a);

struct ProductPresentation {
  AlgebraPresentation algebra;
  std::string idempotent_var;
  AlgebraHom to_first;
  AlgebraHom to_second;
};

/// A1 x A2 on the disjoint union of generators plus an idempotent variable
/// e with A1 = eA and A2 = (1-e)A. Clashing names in A2 are primed.
/// Throws MixedFields.
ProductPresentation product_algebra(const AlgebraPresentation& a1, const AlgebraPresentation& a2,
                                    const std::string& idempotent_var = "e");

}  // namespace resweil
