#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "resweil/field.hpp"

namespace resweil {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over a finite field, coefficients stored low
/// to high with no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<FieldElement> coeffs);

  static UniPoly constant(const Field& f, const FieldElement& c);
  /// c * x^k
  static UniPoly monomial(const Field& f, const FieldElement& c, std::size_t k);
  static UniPoly x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
  FieldElement leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  UniPoly scale(const FieldElement& c) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Total order: by degree, then coefficients high to low in label order.
  int compare(const UniPoly& other) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtGcd {
  UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& mod);
UniPoly powmod(UniPoly a, BigInt e, const UniPoly& mod);
UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& mod);

/// a^(q^k) mod `mod`, with q the order of the coefficient field.
UniPoly frobenius_powmod(UniPoly a, unsigned k, const UniPoly& mod);

/// Order of the coefficient field as an exact integer.
BigInt field_order(const Field& f);

}  // namespace resweil
