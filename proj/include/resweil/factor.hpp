#pragma once

#include <cstdint>
#include <vector>

#include "resweil/unipoly.hpp"

namespace resweil {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Factor {
  UniPoly poly;  // monic irreducible (or squarefree, for squarefree_decomposition)
  unsigned multiplicity = 1;
};

/// f = lc * prod g_i^i with g_i monic squarefree and pairwise coprime.
/// Factors with g_i = 1 are omitted.
std::vector<Factor> squarefree_decomposition(const UniPoly& f);

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree; `multiplicity` carries that degree.
std::vector<Factor> distinct_degree_factorization(const UniPoly& f);

/// Splits a monic squarefree product of irreducibles of degree d.
/// Randomized (Cantor-Zassenhaus); the result is sorted, so it does not
/// depend on the seed.
std::vector<UniPoly> equal_degree_split(const UniPoly& f, unsigned d, std::uint64_t seed = kDefaultSeed);

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Throws ZeroPolynomial.
std::vector<Factor> factor_univariate(const UniPoly& f, std::uint64_t seed = kDefaultSeed);

bool is_irreducible(const UniPoly& f);

/// Distinct roots of f in `field`, which must contain the coefficient
/// field of f; listed in label order. Throws ZeroPolynomial.
std::vector<FieldElement> roots_in(const UniPoly& f, const Field& field, std::uint64_t seed = kDefaultSeed);

/// Coefficient-wise embedding of f into an extension field.
UniPoly embed_poly(const UniPoly& f, const Field& target);

}  // namespace resweil
