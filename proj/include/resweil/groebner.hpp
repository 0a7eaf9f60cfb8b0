#pragma once

#include <optional>
#include <vector>

#include "resweil/mpoly.hpp"

namespace resweil {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;
inline constexpr std::size_t kMaxStandardMonomials = 1'000'000;

/// Reduced Groebner basis under degrevlex: monic, auto-reduced, sorted by
/// increasing leading monomial. Reduced bases are unique, so equality of
/// bases is equality of ideals.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<MPoly> reduced) : ring_(std::move(ring)), basis_(std::move(reduced)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<MPoly>& polys() const { return basis_; }
  /// The unit ideal, basis {1}.
  bool is_unit() const;
  bool contains(const MPoly& f) const { return normal_form(f).is_zero(); }

  /// Unique remainder modulo the ideal. Throws MixedContexts.
  MPoly normal_form(const MPoly& f) const;

  /// Monomials outside the leading-term ideal, increasing degrevlex (so 1
  /// comes first when the quotient is nonzero); nullopt when infinitely many.
  std::optional<std::vector<Monomial>> standard_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return *a.ring_ == *b.ring_ && a.basis_ == b.basis_;
  }

 private:
  RingPtr ring_;
  std::vector<MPoly> basis_;
};

/// Reduced Groebner basis of the ideal generated by `generators`.
/// Throws MixedContexts, or StepGuardExceeded after `step_budget`
/// S-polynomial reductions.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<MPoly>& generators,
                         std::size_t step_budget = kDefaultStepBudget);

/// Full reduction of f by an arbitrary list of polynomials.
MPoly reduce(const MPoly& f, const std::vector<MPoly>& divisors);

}  // namespace resweil
