#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resweil/weilres.hpp"

namespace resweil {

/// A finite set with one Frobenius permutation, realized inside F_{p^L}.
/// Elements are coordinate tuples in the ambient field, sorted in label
/// order. frob[i] is the index of x -> x^(p^frob_exponent) applied to
/// element i coordinatewise (or, for twisted products, the reindexed
/// action described at product_gamma_set).
struct GammaSet {
  Field ambient;
  unsigned frob_exponent = 1;
  std::vector<Point> points;
  std::vector<std::size_t> frob;
  std::vector<std::string> labels;

  std::size_t size() const { return points.size(); }
  /// Cycle lengths, ascending.
  std::vector<std::size_t> cycle_type() const;
  /// Cycles, each starting at its smallest index, ordered by that index.
  std::vector<std::vector<std::size_t>> cycles() const;
  /// frob is a bijection whose order divides [ambient : F_{p^frob_exponent}].
  bool is_valid() const;
  /// Index of a coordinate tuple, if present.
  std::optional<std::size_t> find(const Point& x) const;
};

/// Builds a GammaSet from unsorted points closed under coordinatewise
/// x -> x^(p^frob_exponent). Throws Internal if they are not closed.
GammaSet make_gamma_set(const Field& ambient, unsigned frob_exponent, std::vector<Point> points);

/// Label-to-label map between two GammaSets.
struct EquivariantMap {
  std::vector<std::size_t> images;
  bool bijective = false;
};

/// map ∘ frob_1 = frob_2 ∘ map on every element.
bool commutes(const EquivariantMap& f, const GammaSet& source, const GammaSet& target);

/// Least stage M with every residue field of A inside F_{p^(deg k * M)},
/// i.e. the lcm of the residue degrees of the local factors.
unsigned splitting_stage(const AlgebraPresentation& a);

/// S = Hom(A, F_{p^L}) with x -> x^p acting on the images of A's
/// generators. L defaults to the splitting stage times deg k and must be
/// a multiple of it. Throws EmptyBase.
GammaSet geometric_points(const AlgebraPresentation& a, std::optional<unsigned> stage = std::nullopt);

/// X_s = Spec K[y]/(g(s, y)) over K, the ambient field of s.
/// Throws PositiveDimensionalFiber.
AlgebraPresentation fiber(const SchemePresentation& x, const Point& s, const Field& k);

/// Hom(C, F_{p^L}) for a zero-dimensional C over F_{p^M}, with the relative
/// Frobenius x -> x^(p^M). L defaults to the lcm of M and M times the
/// residue degrees. Throws NotZeroDimensional.
GammaSet pi0_points(const AlgebraPresentation& c, std::optional<unsigned> stage = std::nullopt);

/// Same point set with the absolute Frobenius x -> x^p; needs C's
/// relations to be stable under it (true when C is defined over F_p).
GammaSet pi0_points_absolute(const AlgebraPresentation& c, unsigned stage);

inline constexpr std::uint64_t kMaxProductSize = 1'000'000;

/// ∏_{s∈S} X_s as tuples (u_s), lexicographic in the fiber indices. Only
/// the point sets of the fibers are used; the action is the left action of
/// absolute Frobenius F: (F u)_{F(s)} = F(u_s), applied coordinatewise.
/// Throws MissingFiber, AmbientMismatch, SearchGuardExceeded.
GammaSet product_gamma_set(const GammaSet& s, const std::vector<GammaSet>& fibers);

/// Pointwise check that the evaluation map from tuples into ⊔_s X_s
/// intertwines the two actions: F(u_s) is component F(s) of F·u.
bool evaluation_equivariant(const GammaSet& product, const GammaSet& s, const std::vector<GammaSet>& fibers);

/// Res(X)(F) -> X_s(F) for local A whose residue field is its base field k,
/// where F is the degree-m extension of k: regroup into A ⊗ F, then apply
/// the residue map. Frobenius is relative to k. Throws NotLocalBase.
struct ReductionMap {
  GammaSet source;  // Res(X) points
  GammaSet target;  // X_s points
  EquivariantMap map;
};
ReductionMap reduction_map(const SchemePresentation& x, unsigned m);

/// Cycle-type test; on success an equivariant bijection matching cycles of
/// equal length in canonical order.
std::optional<EquivariantMap> gamma_iso(const GammaSet& a, const GammaSet& b);

}  // namespace resweil
