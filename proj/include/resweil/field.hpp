#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace resweil {

inline constexpr unsigned kMaxExtensionDegree = 24;
inline constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;

/// An element of F_{p^m}, stored as the coefficients c_0..c_{m-1} of a
/// polynomial in the field generator z. Unused slots are always zero, so
/// plain equality is field equality. Arithmetic lives on Field.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t operator[](unsigned i) const { return c_[i]; }
  std::uint32_t& operator[](unsigned i) { return c_[i]; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

/// A finite field F_{p^m} for an odd prime p, presented as F_p[z]/(modulus).
/// The modulus is the smallest monic irreducible polynomial of degree m when
/// coefficient vectors are read as base-p integers (highest coefficient most
/// significant). Fields are cheap handles onto shared immutable data.
class Field {
 public:
  /// The prime field F_p. Throws NonPrime unless p is an odd prime below 2^31.
  static Field prime(std::uint64_t p);

  /// F_{p^m}; repeated calls with the same arguments return the same field.
  /// Throws NonPrime, or DegreeGuardExceeded unless 1 <= m <= 24.
  static Field extension(std::uint64_t p, unsigned m);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  bool is_prime_field() const { return degree() == 1; }

  /// Monic modulus, coefficients low to high (size degree()+1).
  const std::vector<std::uint32_t>& modulus() const;

  /// p^m when it fits in 62 bits.
  std::optional<std::uint64_t> order() const;

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  /// The class of z (equals from_int(0) on F_p, where z is a root of t).
  FieldElement generator() const;

  bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }
  bool is_one(const FieldElement& a) const { return a == one(); }
  /// True if a lies in the prime subfield.
  bool is_prime_subfield_element(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Multiplicative inverse; throws ZeroPolynomial on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// x -> x^p.
  FieldElement frobenius(const FieldElement& a) const;
  /// x -> x^(p^k).
  FieldElement frobenius(FieldElement a, unsigned k) const;

  /// Canonical label order: coefficient vectors compared from the highest
  /// coefficient down, i.e. by the integer sum c_i p^i.
  int compare(const FieldElement& a, const FieldElement& b) const;
  bool less(const FieldElement& a, const FieldElement& b) const { return compare(a, b) < 0; }

  /// Element whose label integer is `index` (index < order()).
  FieldElement element_at(std::uint64_t index) const;

  /// "3" on prime fields; "2z^2+z+4" style polynomials in z otherwise.
  std::string to_string(const FieldElement& a) const;
  /// Signed residue in (-p/2, p/2] for prime-field elements.
  std::int64_t signed_value(const FieldElement& a) const;

  /// Human-readable name, "F_5" or "F_5^4".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.characteristic() == b.characteristic() && a.degree() == b.degree();
  }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// make_ext_field(p, m) of the toolkit: alias of Field::extension.
Field make_ext_field(std::uint64_t p, unsigned m);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Canonical embedding F_{p^a} -> F_{p^b} (a | b): the generator of the
/// source goes to the smallest root, in label order, of the source modulus.
/// Throws IncompatibleDegrees when a does not divide b or characteristics
/// differ.
FieldElement embed(const Field& source, const FieldElement& x, const Field& target);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace resweil
