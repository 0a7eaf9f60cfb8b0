#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resweil/scheme.hpp"

namespace resweil {

inline constexpr std::uint64_t kMaxSearchSpace = 1'000'000;

using Point = std::vector<FieldElement>;

/// Res_{A/k}(X) = Spec k[y_{j,b}]/(G_{i,b}) from y_j = sum_b y_{j,b} e_b.
struct RestrictedScheme {
  SchemePresentation scheme;
  /// Expansion basis of A (normal forms in A's ring).
  std::vector<MPoly> basis;
  /// k[y_{j,b}], ordered j-major.
  RingPtr ring;
  /// components[i][b] = G_{i,b}; zero components are kept.
  std::vector<std::vector<MPoly>> components;

  const Field& field() const { return ring->field(); }
  std::size_t dimension() const { return basis.size(); }
  std::size_t var_index(std::size_t j, std::size_t b) const { return j * basis.size() + b; }
  /// All G_{i,b}, i-major.
  std::vector<MPoly> relations() const;
  /// Expansion y_j -> sum_b y_{j,b} e_b in the ring (t..., y_{j,b}...).
  std::vector<MPoly> expansion(const RingPtr& combined) const;
  RingPtr combined_ring() const;
  /// sum_b G_{i,b} e_b == g_i(expansion) modulo A, for every i.
  bool round_trip() const;
  GroebnerBasis groebner() const { return buchberger(ring, relations()); }
  AlgebraPresentation algebra() const { return AlgebraPresentation(ring, relations()); }
};

/// Expands over the standard-monomial basis of X's base, or over `basis`
/// (any k-basis of A, given as polynomials in A's ring).
/// Throws EmptyBase, NotFinite.
RestrictedScheme weil_restrict(const SchemePresentation& x, const std::optional<std::vector<MPoly>>& basis = std::nullopt);

/// Remark-style emptiness: the restricted ideal is the unit ideal.
bool is_empty(const RestrictedScheme& r);

/// All common zeros in K^n of polynomials over a subfield of K, sorted
/// lexicographically in label order. Zero-dimensional systems are solved
/// by Groebner back-substitution; others by exhaustive search when
/// |K|^n <= 10^6, else SearchGuardExceeded.
std::vector<Point> enumerate_points(const std::vector<MPoly>& system, const RingPtr& ring, const Field& k);
std::vector<Point> enumerate_points(const RestrictedScheme& r, const Field& k);

/// Elements of A ⊗ K as coordinate vectors, and tuples of them.
using AlgebraPoint = std::vector<Vec>;

/// X(A ⊗ K) computed on the algebra side: Hensel lifting of Teichmueller
/// candidates factor by factor for etale X, exhaustive search otherwise.
struct AlgebraPoints {
  std::vector<AlgebraPoint> points;
  std::string method;
};
AlgebraPoints algebra_points(const SchemePresentation& x, const Field& k, std::uint64_t seed = kDefaultSeed);

struct AdjunctionReport {
  unsigned m = 0;
  std::size_t res_points = 0;
  std::size_t algebra_points = 0;
  std::string method;
  bool forward_ok = false;   // every Res point regroups to a solution over A ⊗ K
  bool backward_ok = false;  // every solution ungroups to a Res point
  bool passed = false;
  std::string detail;
};

/// Hom_k(Spec F_{p^m}, Res X) vs X(A ⊗ F_{p^m}) with the regrouping bijection.
AdjunctionReport adjunction_check(const SchemePresentation& x, unsigned m, std::uint64_t seed = kDefaultSeed);

struct ProductFormulaReport {
  bool change_of_basis_invertible = false;
  bool ideals_equal = false;
  struct Count {
    unsigned m;
    std::size_t whole, first, second;
  };
  std::vector<Count> counts;
  bool passed = false;
  std::string detail;
};

/// Res over A1 x A2 against Res_{A1}(X_1) x Res_{A2}(X_2), where X is over
/// prod.algebra and X_i is its pullback along the i-th projection.
ProductFormulaReport product_formula_check(const ProductPresentation& prod, const SchemePresentation& x,
                                           unsigned max_m = 3);

struct CoverReport {
  struct Stage {
    unsigned m;
    std::size_t res_points;
    std::vector<std::size_t> lifts;  // per cover element
    bool lifts_match_units = false;
    bool covered = false;
  };
  std::vector<Stage> stages;
  bool passed = false;
  std::string detail;
};

/// Cover check on D(h) = Spec B[z]/(z h - 1) for local A with residue field
/// k. Throws NotLocalBase, NotCovering.
CoverReport open_cover_check(const SchemePresentation& x, const std::vector<MPoly>& cover, unsigned max_m = 2,
                             std::uint64_t seed = kDefaultSeed);

/// Regroups a point of Res over K into elements of A ⊗ K (standard basis):
/// u_j = sum_b a_{j,b} e_b.
AlgebraPoint regroup(const RestrictedScheme& r, const Point& p, const Field& k);

}  // namespace resweil
