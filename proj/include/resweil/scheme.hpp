#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resweil/algebra.hpp"

namespace resweil {

/// Affine A-scheme Spec A[y_1..y_q]/(g_1..g_r). Relations live in the
/// combined ring (base generators first, then the y's), with their base
/// part reduced modulo the base ideal.
class SchemePresentation {
 public:
  SchemePresentation(AlgebraPresentation base, std::vector<std::string> scheme_vars, std::vector<MPoly> relations);

  /// Relations given in any ring whose variable names are base or scheme
  /// variables; throws UndeclaredVariable otherwise.
  static SchemePresentation from_named(AlgebraPresentation base, std::vector<std::string> scheme_vars,
                                       const std::vector<MPoly>& relations);

  const AlgebraPresentation& base() const { return base_; }
  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  std::size_t num_base_vars() const { return base_.ring()->nvars(); }
  std::size_t num_scheme_vars() const { return scheme_vars_.size(); }
  const std::vector<std::string>& scheme_vars() const { return scheme_vars_; }
  const std::vector<MPoly>& relations() const { return relations_; }

  /// Index of scheme variable j in the combined ring.
  std::size_t scheme_index(std::size_t j) const { return num_base_vars() + j; }

  /// B = A[y]/(g) as a k-algebra on the combined generators.
  AlgebraPresentation coordinate_ring() const;

  /// Pullback along A -> A' sending base generator i to base_images[i]
  /// (polynomials in the ring of new_base).
  SchemePresentation base_change(const AlgebraPresentation& new_base, const std::vector<MPoly>& base_images) const;
  SchemePresentation base_change(const AlgebraHom& hom) const { return base_change(hom.target, hom.images); }
  /// X ⊗_k K.
  SchemePresentation extend_scalars(const Field& k) const;

 private:
  AlgebraPresentation base_;
  std::vector<std::string> scheme_vars_;
  RingPtr ring_;
  std::vector<MPoly> relations_;
};

struct EtaleCertificate {
  bool etale = false;
  /// det(dg_i/dy_j) as a normal form in B.
  MPoly jacobian_det;
  /// Its inverse in B when etale.
  std::optional<MPoly> inverse;
  std::string obstruction;
};

/// Standard-etale check: the Jacobian determinant of a square system is a
/// unit in the finite algebra B. Throws NotSquareSystem, NotFinite, EmptyBase.
EtaleCertificate etale_check(const SchemePresentation& x);

/// Determinant of a square matrix of polynomials (cofactor expansion).
MPoly determinant(const std::vector<std::vector<MPoly>>& m, const RingPtr& ring);

}  // namespace resweil
