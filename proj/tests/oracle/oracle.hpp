#pragma once
// Test-only reference implementations: naive, exhaustive, independent of the
// library's algorithms. Only the library's FieldElement arithmetic is reused
// for brute-force point enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "resweil/field.hpp"
#include "resweil/mpoly.hpp"

namespace oracle {

using Coeffs = std::vector<std::uint32_t>;  // low to high

inline Coeffs trim(Coeffs a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Coeffs mod_poly(Coeffs a, const Coeffs& m, std::uint64_t p) {
  a = trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic.
  while (a.size() > dm && !a.empty()) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p * p - c * m[i] % p) % p);
    a = trim(a);
  }
  return a;
}

inline Coeffs mul_poly(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return trim(r);
}

/// Monic polynomials of degree d in increasing base-p order of the
/// coefficient vector read from the top coefficient down.
inline std::vector<Coeffs> monic_polys(std::uint64_t p, unsigned d) {
  std::vector<Coeffs> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs c(d + 1, 0);
    c[d] = 1;
    std::uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    out.push_back(c);
  }
  return out;
}

/// Irreducibility by trial division against every monic polynomial of
/// degree 1..deg/2.
inline bool irreducible_by_trial(const Coeffs& f, std::uint64_t p) {
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  for (unsigned k = 1; k <= d / 2; ++k)
    for (const auto& g : monic_polys(p, k))
      if (mod_poly(f, g, p).empty()) return false;
  return true;
}

inline Coeffs smallest_irreducible(std::uint64_t p, unsigned d) {
  for (const auto& f : monic_polys(p, d))
    if (irreducible_by_trial(f, p)) return f;
  return {};
}

/// Roots by exhaustion over all field elements.
inline std::vector<resweil::FieldElement> brute_roots(const std::function<resweil::FieldElement(const resweil::FieldElement&)>& f,
                                                      const resweil::Field& k) {
  std::vector<resweil::FieldElement> out;
  const std::uint64_t q = *k.order();
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto x = k.element_at(i);
    if (k.is_zero(f(x))) out.push_back(x);
  }
  return out;
}

/// All solutions of a polynomial system over k by exhaustive search, in
/// label order (lexicographic over coordinates).
inline std::vector<std::vector<resweil::FieldElement>> brute_points(const std::vector<resweil::MPoly>& system,
                                                                    std::size_t nvars, const resweil::Field& k) {
  std::vector<std::vector<resweil::FieldElement>> out;
  const std::uint64_t q = *k.order();
  std::vector<std::uint64_t> idx(nvars, 0);
  std::vector<resweil::FieldElement> pt(nvars);
  for (;;) {
    for (std::size_t i = 0; i < nvars; ++i) pt[i] = k.element_at(idx[i]);
    bool ok = true;
    for (const auto& g : system) {
      if (!k.is_zero(resweil::evaluate(g, pt, k))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(pt);
    std::size_t i = nvars;
    while (i > 0) {
      --i;
      if (++idx[i] < q) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (nvars == 0) return out;
  }
}

/// Cycle type (sorted lengths) of a permutation.
inline std::vector<std::size_t> cycle_type(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Frobenius permutation of a point list by naive repeated multiplication
/// (x^(p^e), coordinatewise) and linear search.
inline std::vector<std::size_t> frobenius_perm(const std::vector<std::vector<resweil::FieldElement>>& pts,
                                               const resweil::Field& k, unsigned e) {
  std::vector<std::size_t> out;
  for (const auto& x : pts) {
    auto y = x;
    for (auto& c : y) {
      for (unsigned r = 0; r < e; ++r) {
        auto acc = k.one();
        for (std::uint32_t i = 0; i < k.characteristic(); ++i) acc = k.mul(acc, c);
        c = acc;
      }
    }
    const auto it = std::find(pts.begin(), pts.end(), y);
    out.push_back(it == pts.end() ? pts.size() : static_cast<std::size_t>(it - pts.begin()));
  }
  return out;
}

}  // namespace oracle
