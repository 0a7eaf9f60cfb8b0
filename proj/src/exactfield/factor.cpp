#include "resweil/factor.hpp"

#include <algorithm>
#include <random>

#include "resweil/error.hpp"

namespace resweil {

namespace {

// c -> c^(1/p) on F_{p^m}: the inverse Frobenius is Frobenius^(m-1).
UniPoly pth_root(const UniPoly& f) {
  const Field& field = f.field();
  const std::size_t p = field.characteristic();
  std::vector<FieldElement> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p)
    v.push_back(field.frobenius(f.coeffs()[i], field.degree() - 1));
  return UniPoly(field, std::move(v));
}

FieldElement random_element(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
  FieldElement e;
  for (unsigned i = 0; i < field.degree(); ++i) e[i] = dist(rng);
  return e;
}

void sort_polys(std::vector<UniPoly>& v) {
  std::sort(v.begin(), v.end(), [](const UniPoly& a, const UniPoly& b) { return a.compare(b) < 0; });
}

void split_recursive(const UniPoly& f, unsigned d, const BigInt& exponent, std::mt19937_64& rng,
                     std::vector<UniPoly>& out) {
  if (f.degree() <= static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Field& field = f.field();
  const UniPoly one = UniPoly::constant(field, field.one());
  for (;;) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = random_element(field, rng);
    UniPoly a(field, std::move(coeffs));
    if (a.degree() < 1) continue;
    UniPoly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_recursive(g, d, exponent, rng, out);
      split_recursive(f / g, d, exponent, rng, out);
      return;
    }
    UniPoly b = powmod(a, exponent, f) - one;
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_recursive(g, d, exponent, rng, out);
      split_recursive(f / g, d, exponent, rng, out);
      return;
    }
  }
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const UniPoly& input) {
  if (input.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  const Field& field = input.field();
  const UniPoly f = input.monic();
  std::vector<Factor> out;
  if (f.degree() <= 0) return out;
  const unsigned p = field.characteristic();
  const UniPoly one = UniPoly::constant(field, field.one());

  const UniPoly df = f.derivative();
  if (df.is_zero()) {
    for (auto& fac : squarefree_decomposition(pth_root(f))) out.push_back({fac.poly, fac.multiplicity * p});
    return out;
  }
  UniPoly c = gcd(f, df);
  UniPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    UniPoly y = gcd(w, c);
    UniPoly z = w / y;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0) {
    for (auto& fac : squarefree_decomposition(pth_root(c))) out.push_back({fac.poly, fac.multiplicity * p});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

std::vector<Factor> distinct_degree_factorization(const UniPoly& f) {
  const Field& field = f.field();
  std::vector<Factor> out;
  UniPoly rest = f.monic();
  const UniPoly x = UniPoly::x(field);
  UniPoly h = x % rest;
  for (unsigned i = 1; rest.degree() >= 2 * static_cast<int>(i); ++i) {
    h = frobenius_powmod(h, 1, rest);
    UniPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.push_back({g, i});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
  return out;
}

std::vector<UniPoly> equal_degree_split(const UniPoly& f, unsigned d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const BigInt q = field_order(f.field());
  BigInt qd = 1;
  for (unsigned i = 0; i < d; ++i) qd *= q;
  const BigInt exponent = (qd - 1) / 2;
  std::vector<UniPoly> out;
  split_recursive(f.monic(), d, exponent, rng, out);
  for (auto& g : out) g = g.monic();
  sort_polys(out);
  return out;
}

std::vector<Factor> factor_univariate(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of the zero polynomial");
  std::vector<Factor> out;
  for (const auto& sq : squarefree_decomposition(f)) {
    for (const auto& dd : distinct_degree_factorization(sq.poly)) {
      for (auto& g : equal_degree_split(dd.poly, dd.multiplicity, seed)) out.push_back({g, sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    const int c = a.poly.compare(b.poly);
    return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const UniPoly& input) {
  if (input.degree() <= 0) return false;
  if (input.degree() == 1) return true;
  const UniPoly f = input.monic();
  const unsigned n = static_cast<unsigned>(f.degree());
  const UniPoly x = UniPoly::x(f.field());
  if (!(frobenius_powmod(x, n, f) - x).is_zero()) return false;
  for (unsigned r : prime_divisors(n)) {
    if (gcd(frobenius_powmod(x, n / r, f) - x, f).degree() > 0) return false;
  }
  return true;
}

UniPoly embed_poly(const UniPoly& f, const Field& target) {
  if (f.field() == target) return f;
  std::vector<FieldElement> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(embed(f.field(), c, target));
  return UniPoly(target, std::move(v));
}

std::vector<FieldElement> roots_in(const UniPoly& f, const Field& field, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const UniPoly g0 = embed_poly(f, field).monic();
  if (g0.degree() <= 0) return {};
  const UniPoly x = UniPoly::x(field);
  const UniPoly g = gcd(frobenius_powmod(x, 1, g0) - x, g0);
  std::vector<FieldElement> roots;
  if (g.degree() <= 0) return roots;
  for (const auto& lin : equal_degree_split(g, 1, seed)) roots.push_back(field.neg(lin.coeff(0)));
  std::sort(roots.begin(), roots.end(), [&](const FieldElement& a, const FieldElement& b) { return field.less(a, b); });
  return roots;
}

}  // namespace resweil
