#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "resweil/field.hpp"

namespace resweil {

/// Exponent vector over a ring's ordered variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned exponent);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

 private:
  boost::container::small_vector<std::uint16_t, 8> e_;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic comparison (-1, 0, 1); x_0 > x_1 > ...
int degrevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) > 0; }
};
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) < 0; }
};

/// Coefficient field plus an ordered variable list.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables)
      : field_(std::move(field)), vars_(std::move(variables)) {}

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(const Field& field, std::vector<std::string> variables);

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse multivariate polynomial; terms sorted by decreasing degrevlex,
/// no zero coefficients.
class MPoly {
 public:
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(const RingPtr& ring, const FieldElement& c);
  static MPoly constant(const RingPtr& ring, std::int64_t c);
  static MPoly variable(const RingPtr& ring, std::size_t index);
  static MPoly variable(const RingPtr& ring, const std::string& name);
  static MPoly term(const RingPtr& ring, const Monomial& m, const FieldElement& c);
  /// Collects like terms and drops zeros.
  static MPoly from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term (zero if absent).
  FieldElement constant_coeff() const;
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  unsigned total_degree() const;
  bool uses_variable(std::size_t index) const;

  MPoly monic() const;
  MPoly scale(const FieldElement& c) const;
  MPoly mul_term(const Monomial& m, const FieldElement& c) const;
  MPoly neg() const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned e) const;

  /// "2*y0*y1 - y1 - 1": prime-field coefficients as signed residues,
  /// extension coefficients parenthesized.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws MixedContexts unless the rings agree.
void require_same_ring(const PolyRing& a, const PolyRing& b, const char* where);

/// Substitutes images[i] for variable i and expands. All images must share
/// one target ring. Throws MissingAssignment if images.size() != nvars.
MPoly substitute_expand(const MPoly& f, const std::vector<MPoly>& images);

/// Same with an explicit target ring, which also covers rings without variables.
MPoly substitute_expand(const MPoly& f, const std::vector<MPoly>& images, const RingPtr& target);

/// Same, keyed by variable name; every variable used by f must be assigned.
MPoly substitute_expand(const MPoly& f, const std::map<std::string, MPoly>& assignment, const RingPtr& target);

MPoly partial_derivative(const MPoly& f, std::size_t index);

/// Evaluates f at a point whose coordinates lie in `field` (an extension
/// of f's coefficient field).
FieldElement evaluate(const MPoly& f, std::span<const FieldElement> point, const Field& field);

/// Moves f into `target`: coefficients are embedded into the target field
/// and variable i of f becomes variable index_map[i] of the target.
MPoly map_into(const MPoly& f, const RingPtr& target, const std::vector<std::size_t>& index_map);

/// Moves f into a ring with the same variable names (by name) and an
/// extension coefficient field.
MPoly map_into(const MPoly& f, const RingPtr& target);

}  // namespace resweil
