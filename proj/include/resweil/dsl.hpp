#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resweil/algebra.hpp"
#include "resweil/scheme.hpp"

namespace resweil {

/// Parses a polynomial over the ring's field: integers are residues, `^`
/// takes a nonnegative integer exponent, `*` may be omitted after a number.
/// Throws SyntaxError or UndeclaredVariable (with line/column when known).
MPoly parse_poly(const std::string& text, const RingPtr& ring);

struct AlgebraDecl {
  std::string name;
  std::vector<std::string> vars;
  std::vector<MPoly> relations;
  /// Set for `algebra A = A1 * A2 idem e`.
  std::optional<std::pair<std::string, std::string>> product_of;
  std::string idempotent_var;

  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct Expectations {
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> pi0_res;
  std::optional<std::uint64_t> dim_a;
  std::optional<bool> smooth;
  /// Fiber sizes listed in the order of S.
  std::optional<std::vector<std::uint64_t>> fibers;
  /// Sorted Frobenius cycle lengths on pi0 of the restriction.
  std::optional<std::vector<std::uint64_t>> cycle_type;

  friend bool operator==(const Expectations&, const Expectations&) = default;
};

struct CheckToggles {
  bool theorem = false;
  bool lemma_local = false;
  bool product = false;
  std::vector<unsigned> adjunction;
  std::vector<MPoly> cover;

  friend bool operator==(const CheckToggles&, const CheckToggles&) = default;
};

/// One case file: a base algebra (the last one declared), a scheme over it,
/// optional expectations and the checks to run.
struct Case {
  std::string name;
  std::uint64_t p = 0;
  std::vector<AlgebraDecl> algebras;
  std::vector<std::string> scheme_vars;
  std::vector<MPoly> scheme_relations;
  std::string scheme_name = "X";
  Expectations expect;
  CheckToggles checks;

  Field field() const { return Field::prime(p); }
  /// Presentation of a declared algebra (products are assembled on demand).
  AlgebraPresentation algebra(const std::string& name) const;
  AlgebraPresentation base() const { return algebra(algebras.back().name); }
  const AlgebraDecl& base_decl() const { return algebras.back(); }
  SchemePresentation scheme() const;

  friend bool operator==(const Case&, const Case&) = default;
};

/// Parses the case DSL; `source` names the input in diagnostics.
Case parse_case(const std::string& text, const std::string& source = "<input>");
Case parse_case_file(const std::string& path);

/// Canonical text form; parse_case(render(c)) == c.
std::string render(const Case& c);

}  // namespace resweil
