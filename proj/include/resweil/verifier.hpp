#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "resweil/dsl.hpp"
#include "resweil/gammaset.hpp"

namespace resweil {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, ExpectedFailure, Guard };
std::string_view to_string(CheckStatus s) noexcept;

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;
};

/// Everything the theorem pipeline computes; also feeds `resweil pi0`.
struct TheoremData {
  unsigned stage = 0;  // L: every set below is realized in F_{p^L}
  bool smooth = false;
  std::string smooth_detail;
  RestrictedScheme restriction;
  GammaSet s, left, right;
  std::vector<GammaSet> fibers;
  std::optional<EquivariantMap> cycle_match;  // gamma_iso(left, right)
  EquivariantMap psi;                         // evaluation lift, left -> right
  bool psi_total = false;
  std::size_t factor_count_product = 0;
  bool evaluation_equivariant = false;
};

/// Pipeline for one case: restriction, both Γ-sets at a common stage, the
/// cycle-type isomorphism, the evaluation witness and the count through
/// the local factors of A ⊗ F_{p^L}. Throws only resource guards and
/// precondition errors from the kernel.
TheoremData compute_theorem(const Case& c);

/// Fills `checks` and returns the report section data for verify_theorem.
struct TheoremReport {
  TheoremData data;
  std::vector<CheckOutcome> checks;
};
TheoremReport verify_theorem(const Case& c);

/// Reduction map bijectivity: directly for local A with residue field k,
/// otherwise on each local factor of A ⊗ F_{p^M}.
struct LemmaReport {
  std::string variant;  // "local" or "factors"
  struct Part {
    std::string factor;
    std::size_t source = 0, target = 0;
    bool bijective = false, equivariant = false;
  };
  std::vector<Part> parts;
  CheckOutcome outcome;
};
LemmaReport verify_lemma_local(const Case& c);

struct CaseResult {
  std::string name;
  std::vector<CheckOutcome> checks;
  Json report;
  /// 0 pass, 1 verification failure, 3 guard.
  int exit_code = 0;
};
CaseResult run_case(const Case& c, const std::string& source, const VerifyOptions& opts);

struct SuiteResult {
  std::vector<CaseResult> cases;        // sorted by case name
  std::vector<std::string> input_errors;  // one diagnostic per bad file
  int exit_code = 0;
  Json to_json() const;
  std::string to_text() const;
};
SuiteResult run_suite(const std::vector<std::string>& paths, const VerifyOptions& opts);

}  // namespace resweil
