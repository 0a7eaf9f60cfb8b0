// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "resweil/error.hpp"
#include "resweil/verifier.hpp"

using namespace resweil;

namespace {

// Pinned tolerances and sizes.
constexpr double kMaxCaseMillis = 10'000.0;
constexpr std::size_t kMinTheoremCases = 12;
constexpr std::uint64_t kBruteForceLimit = 1'000'000;
constexpr int kKernelTrials = 1000;
constexpr std::uint64_t kSeed = 42;

struct Loaded {
  std::string path;
  Case c;
};

std::vector<Loaded> load_corpus() {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(RESWEIL_CASES_DIR))
    if (e.path().extension() == ".case") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<Loaded> out;
  for (const auto& p : paths) out.push_back({p, parse_case_file(p)});
  return out;
}

bool expects_failure(const Case& c) { return c.expect.smooth == false; }

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what << " (" << detail << ")\n";
  if (!ok) ++failures;
}

template <class F>
void guarded(int n, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, what, std::string("exception: ") + e.what());
  }
}

void theorem_suite(const std::vector<Loaded>& corpus) {
  std::size_t cases = 0;
  std::set<std::uint64_t> primes;
  double slowest = 0;
  std::string bad;
  for (const auto& [path, c] : corpus) {
    if (!c.checks.theorem || expects_failure(c)) continue;
    ++cases;
    primes.insert(c.p);
    const auto t0 = std::chrono::steady_clock::now();
    const TheoremReport tr = verify_theorem(c);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    slowest = std::max(slowest, ms);
    const auto& d = tr.data;
    bool ok = ms < kMaxCaseMillis && d.left.size() == d.right.size() && d.left.cycle_type() == d.right.cycle_type() &&
              d.cycle_match && d.cycle_match->bijective && commutes(*d.cycle_match, d.left, d.right) &&
              d.psi.bijective && commutes(d.psi, d.left, d.right) && d.evaluation_equivariant;
    for (const auto& o : tr.checks) ok = ok && o.status == CheckStatus::Pass;
    if (!ok) bad += " " + c.name;
  }
  const bool ok = bad.empty() && cases >= kMinTheoremCases && primes == std::set<std::uint64_t>{3, 5, 7};
  std::ostringstream d;
  d << cases << " cases over p in {3,5,7}, slowest " << static_cast<long>(slowest) << " ms < " << kMaxCaseMillis
    << " ms" << (bad.empty() ? "" : "; failing:" + bad);
  report(1, ok, "equivariant bijection pi0(Res) <-> product of fiber pi0 on the curated suite", d.str());
}

SchemePresentation remark_scheme() {
  const RingPtr ar = make_ring(Field::prime(5), {"eps"});
  const AlgebraPresentation a(ar, {parse_poly("eps^2", ar)});
  return SchemePresentation::from_named(a, {}, {parse_poly("eps", ar)});
}

void remark_empty() {
  const auto r = weil_restrict(remark_scheme());
  const auto gb = r.groebner();
  const bool ok = gb.polys().size() == 1 && gb.polys()[0] == MPoly::constant(r.ring, 1);
  report(2, ok, "restriction of Spec A/(eps) over F_5[eps]/(eps^2) has Groebner basis {1}",
         "basis has " + std::to_string(gb.polys().size()) + " element(s)");
}

void negative_control(const std::vector<Loaded>& corpus) {
  std::size_t seen = 0;
  bool ok = true;
  std::string detail;
  for (const auto& [path, c] : corpus) {
    if (!expects_failure(c)) continue;
    ++seen;
    const CaseResult r = run_case(c, path, {});
    bool smooth_failed = false, theorem_failed = false;
    for (const auto& o : r.checks) {
      if (o.name == "smoothness") smooth_failed = o.status == CheckStatus::ExpectedFailure;
      if (o.name == "theorem") theorem_failed = o.status == CheckStatus::ExpectedFailure;
    }
    const auto left = r.report["pi0_left"]["size"].get<std::size_t>();
    const auto right = r.report["pi0_right"]["size"].get<std::size_t>();
    ok = ok && smooth_failed && theorem_failed && left == 0 && right == 1 && r.exit_code == 0;
    detail += c.name + ": pi0(Res) " + std::to_string(left) + " vs product " + std::to_string(right) +
              (smooth_failed ? ", smoothness precheck fails" : ", smoothness precheck did not fail");
  }
  report(3, ok && seen >= 1, "non-smooth case reported as the expected failure", detail);
}

void adjunction(const std::vector<Loaded>& corpus) {
  std::size_t runs = 0;
  std::string bad;
  for (const auto& [path, c] : corpus) {
    for (unsigned m = 1; m <= 3; ++m) {
      const auto rep = adjunction_check(c.scheme(), m, kSeed);
      ++runs;
      if (!(rep.passed && rep.forward_ok && rep.backward_ok && rep.res_points == rep.algebra_points))
        bad += " " + c.name + "@" + std::to_string(m);
    }
  }
  report(4, bad.empty(), "|Res(X)(F_{p^m})| = |X(A (x) F_{p^m})| with a verified bijection, m = 1..3",
         std::to_string(runs) + " runs" + (bad.empty() ? "" : "; failing:" + bad));
}

void product_formula(const std::vector<Loaded>& corpus) {
  std::size_t cases = 0;
  std::string bad;
  for (const auto& [path, c] : corpus) {
    const AlgebraDecl& d = c.base_decl();
    if (!d.product_of) continue;
    ++cases;
    const auto prod = product_algebra(c.algebra(d.product_of->first), c.algebra(d.product_of->second), d.idempotent_var);
    const auto rep = product_formula_check(prod, c.scheme(), 3);
    bool ok = rep.passed && rep.change_of_basis_invertible && rep.ideals_equal && rep.counts.size() == 3;
    for (const auto& k : rep.counts) ok = ok && k.whole == k.first * k.second;
    if (!ok) bad += " " + c.name;
  }
  report(5, bad.empty() && cases >= 1, "product formula: isomorphic presentations and multiplicative counts, m <= 3",
         std::to_string(cases) + " product cases" + (bad.empty() ? "" : "; failing:" + bad));
}

void lemma_local(const std::vector<Loaded>& corpus) {
  std::size_t cases = 0;
  std::string bad;
  for (const auto& [path, c] : corpus) {
    if (expects_failure(c)) continue;
    const auto fs = decompose_local(c.base());
    if (fs.size() != 1) continue;
    ++cases;
    const auto rep = verify_lemma_local(c);
    bool ok = rep.outcome.status == CheckStatus::Pass;
    for (const auto& p : rep.parts) ok = ok && p.bijective && p.equivariant;
    if (!ok) bad += " " + c.name;
  }
  report(6, bad.empty() && cases >= 1, "reduction map pi0(Res) -> pi0(X_s) is bijective for every local base",
         std::to_string(cases) + " local-base cases" + (bad.empty() ? "" : "; failing:" + bad));
}

bool within_limit(const Field& k, std::size_t nvars) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (total > kBruteForceLimit / *k.order()) return false;
    total *= *k.order();
  }
  return true;
}

void oracle_equivalence(const std::vector<Loaded>& corpus) {
  std::size_t compared = 0, skipped = 0;
  std::string bad;
  for (const auto& [path, c] : corpus) {
    const TheoremData d = compute_theorem(c);
    const Field& k = d.s.ambient;
    auto compare = [&](const GammaSet& g, const std::vector<MPoly>& system, std::size_t nvars, unsigned exponent,
                       const std::string& what) {
      if (!within_limit(k, nvars)) {
        ++skipped;
        return;
      }
      ++compared;
      const auto brute = oracle::brute_points(system, nvars, k);
      if (brute != g.points || oracle::frobenius_perm(brute, k, exponent) != g.frob) bad += " " + c.name + ":" + what;
    };
    compare(d.left, d.restriction.relations(), d.restriction.ring->nvars(), 1, "pi0(Res)");
    const AlgebraPresentation a = c.base();
    compare(d.s, a.relations(), a.ring()->nvars(), 1, "S");
    const SchemePresentation x = c.scheme();
    for (std::size_t i = 0; i < d.fibers.size(); ++i) {
      const auto f = fiber(x, d.s.points[i], k);
      compare(d.fibers[i], f.relations(), f.ring()->nvars(), d.fibers[i].frob_exponent, "fiber" + std::to_string(i));
    }
  }
  report(7, bad.empty() && compared > 0,
         "symbolic pi0 data equals exhaustive enumeration, Frobenius permutations identical",
         std::to_string(compared) + " sets compared, " + std::to_string(skipped) + " above 10^6 skipped" +
             (bad.empty() ? "" : "; mismatches:" + bad));
}

std::pair<std::string, int> run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

void determinism(const std::vector<Loaded>& corpus) {
  std::string cmd = std::string("'") + RESWEIL_CLI + "' verify --json --seed 42";
  for (const auto& l : corpus) cmd += " '" + l.path + "'";
  const auto [first, rc1] = run_command(cmd);
  const auto [second, rc2] = run_command(cmd);
  const bool ok = rc1 == 0 && rc2 == 0 && !first.empty() && first == second;
  report(8, ok, "two runs of `resweil verify --json --seed 42` are byte-identical",
         std::to_string(first.size()) + " bytes, exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2));
}

MPoly random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_deg, std::size_t terms) {
  const Field& f = r->field();
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, static_cast<unsigned>(rng() % (max_deg + 1)));
    ts.push_back({m, f.element_at(rng() % *f.order())});
  }
  return MPoly::from_terms(r, ts);
}

FieldElement naive_pow_p(const Field& k, const FieldElement& a) {
  FieldElement acc = k.one();
  for (std::uint32_t i = 0; i < k.characteristic(); ++i) acc = k.mul(acc, a);
  return acc;
}

void kernel_properties() {
  std::mt19937_64 rng(kSeed);
  const std::array<std::uint64_t, 3> primes{3, 5, 7};
  int nf_fail = 0, factor_fail = 0, frob_fail = 0;

  // Groebner normal forms over a few fixed ideals, random inputs.
  std::vector<GroebnerBasis> bases;
  for (auto p : primes) {
    const RingPtr r = make_ring(Field::prime(p), {"x", "y", "z"});
    bases.push_back(buchberger(r, {parse_poly("x^2 - y*z - 1", r), parse_poly("y^2 - x + z", r), parse_poly("z^3 - x*y", r)}));
    bases.push_back(buchberger(r, {parse_poly("x*y - z", r), parse_poly("y^3 - x^2", r)}));
  }
  for (int t = 0; t < kKernelTrials; ++t) {
    const GroebnerBasis& gb = bases[rng() % bases.size()];
    const MPoly f = random_poly(gb.ring(), rng, 4, 6), g = random_poly(gb.ring(), rng, 4, 6);
    const FieldElement c = gb.ring()->field().element_at(rng() % gb.ring()->field().characteristic());
    const MPoly nf = gb.normal_form(f);
    const bool ok = gb.normal_form(nf) == nf && gb.normal_form(f + g) == nf + gb.normal_form(g) &&
                    gb.normal_form(f.scale(c)) == nf.scale(c) && gb.contains(f - nf);
    nf_fail += !ok;
  }

  // Factorization round trip over F_{p^m}, m <= 3.
  for (int t = 0; t < kKernelTrials; ++t) {
    const Field k = make_ext_field(primes[rng() % 3], 1 + static_cast<unsigned>(rng() % 3));
    std::vector<FieldElement> cs(2 + rng() % 9);
    for (auto& x : cs) x = k.element_at(rng() % *k.order());
    if (k.is_zero(cs.back())) cs.back() = k.one();
    const UniPoly f(k, cs);
    const auto fs = factor_univariate(f, rng());
    UniPoly prod = UniPoly::constant(k, f.leading());
    bool ok = true;
    for (const auto& fac : fs) {
      ok = ok && is_irreducible(fac.poly) && k.is_one(fac.poly.leading());
      if (k.is_prime_field() && fac.poly.degree() <= 4) {
        oracle::Coeffs co;
        for (const auto& x : fac.poly.coeffs()) co.push_back(x[0]);
        ok = ok && oracle::irreducible_by_trial(co, k.characteristic());
      }
      for (unsigned i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
    }
    factor_fail += !(ok && prod == f);
  }

  // Frobenius laws on F_{p^m}, m <= 6.
  for (int t = 0; t < kKernelTrials; ++t) {
    const unsigned m = 1 + static_cast<unsigned>(rng() % 6);
    const Field k = make_ext_field(primes[rng() % 3], m);
    const FieldElement a = k.element_at(rng() % *k.order()), b = k.element_at(rng() % *k.order());
    const bool ok = k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)) &&
                    k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)) &&
                    k.frobenius(a) == naive_pow_p(k, a) && k.frobenius(a, m) == a;
    frob_fail += !ok;
  }

  std::ostringstream d;
  d << kKernelTrials << " trials each; failures: normal form " << nf_fail << ", factorization " << factor_fail
    << ", Frobenius " << frob_fail;
  report(9, nf_fail == 0 && factor_fail == 0 && frob_fail == 0,
         "normal-form idempotence/linearity, factorization round trip, Frobenius automorphism laws", d.str());
}

}  // namespace

int main() {
  std::vector<Loaded> corpus;
  try {
    corpus = load_corpus();
  } catch (const std::exception& e) {
    std::cout << "cannot load corpus: " << e.what() << "\n";
    return 2;
  }
  guarded(1, "theorem suite", [&] { theorem_suite(corpus); });
  guarded(2, "empty restriction", [&] { remark_empty(); });
  guarded(3, "negative control", [&] { negative_control(corpus); });
  guarded(4, "adjunction", [&] { adjunction(corpus); });
  guarded(5, "product formula", [&] { product_formula(corpus); });
  guarded(6, "local lemma", [&] { lemma_local(corpus); });
  guarded(7, "oracle equivalence", [&] { oracle_equivalence(corpus); });
  guarded(8, "determinism", [&] { determinism(corpus); });
  guarded(9, "kernel properties", [&] { kernel_properties(); });
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion failure(s)") << "\n";
  return failures == 0 ? 0 : 1;
}
