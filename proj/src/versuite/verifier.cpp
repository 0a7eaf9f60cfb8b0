#include "resweil/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "resweil/error.hpp"

namespace resweil {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::ExpectedFailure:
      return "expected-failure";
    case CheckStatus::Guard:
      return "guard";
  }
  return "fail";
}

namespace {

std::vector<std::uint64_t> to_u64(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return "(" + out + ")";
}

// Stride of component i in the lexicographic tuple numbering of a product.
std::vector<std::uint64_t> strides(const std::vector<GammaSet>& fibers) {
  std::vector<std::uint64_t> st(fibers.size(), 1);
  for (std::size_t i = fibers.size(); i-- > 1;) st[i - 1] = st[i] * fibers[i].size();
  return st;
}

unsigned checked_stage(std::uint64_t l) {
  if (l > kMaxExtensionDegree)
    throw Error(ErrorKind::DegreeGuardExceeded, "common stage F_{p^" + std::to_string(l) + "} exceeds degree 24");
  return static_cast<unsigned>(l);
}

bool precheck_smooth(const SchemePresentation& x, std::string& detail) {
  try {
    const auto cert = etale_check(x);
    detail = cert.etale ? "Jacobian determinant " + cert.jacobian_det.to_string() + " is a unit" : cert.obstruction;
    return cert.etale;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSquareSystem && e.kind() != ErrorKind::NotFinite) throw;
    detail = e.what();
    return false;
  }
}

}  // namespace

TheoremData compute_theorem(const Case& c) {
  const SchemePresentation x = c.scheme();
  const AlgebraPresentation& a = x.base();
  std::string smooth_detail;
  const bool smooth = precheck_smooth(x, smooth_detail);

  RestrictedScheme r = weil_restrict(x);
  const AlgebraPresentation res = r.algebra();
  if (!res.is_finite()) throw Error(ErrorKind::NotZeroDimensional, "the restriction is not zero-dimensional");

  // Common stage: base residue fields, fiber residue fields, and those of Res.
  const unsigned m = splitting_stage(a);
  std::uint64_t l = m;
  {
    const GammaSet s_m = geometric_points(a, checked_stage(m));
    for (const auto& pt : s_m.points) l = lcm_u64(l, std::uint64_t{m} * splitting_stage(fiber(x, pt, s_m.ambient)));
    l = lcm_u64(l, splitting_stage(res));
  }
  const unsigned stage = checked_stage(l);

  GammaSet left = pi0_points_absolute(res, stage);
  GammaSet s = geometric_points(a, stage);
  const Field& k = s.ambient;
  std::vector<GammaSet> fibers;
  for (const auto& pt : s.points) fibers.push_back(pi0_points(fiber(x, pt, k), stage));
  GammaSet right = product_gamma_set(s, fibers);
  const bool eval_eq = evaluation_equivariant(right, s, fibers);
  auto cycle_match = gamma_iso(left, right);

  // psi: a Res point regroups to u in (A ⊗ K)^r; each s : A -> K sends it
  // to a point of X_s, and the tuple of those is an element of the product.
  std::vector<std::vector<FieldElement>> s_of_basis(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t b = 0; b < a.dimension(); ++b) s_of_basis[i].push_back(evaluate(a.basis_element(b), s.points[i], k));
  const auto st = strides(fibers);
  EquivariantMap psi;
  bool total = true;
  std::vector<bool> hit(right.size(), false);
  std::size_t hits = 0;
  for (const auto& pt : left.points) {
    const AlgebraPoint u = regroup(r, pt, k);
    std::uint64_t idx = 0;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      Point y;
      for (const auto& uj : u) {
        FieldElement v = k.zero();
        for (std::size_t b = 0; b < uj.size(); ++b) v = k.add(v, k.mul(uj[b], s_of_basis[i][b]));
        y.push_back(v);
      }
      const auto j = fibers[i].find(y);
      if (j)
        idx += *j * st[i];
      else
        ok = false;
    }
    if (!ok) {
      total = false;
      idx = 0;
    } else if (!hit[idx]) {
      hit[idx] = true;
      ++hits;
    }
    psi.images.push_back(idx);
  }
  psi.bijective = total && left.size() == right.size() && hits == right.size();

  // Count through the local factors of A ⊗ K: Res is multiplicative over them.
  std::size_t factor_product = 1;
  {
    const AlgebraPresentation ak = tensor_extend(a, k);
    const SchemePresentation xk = x.extend_scalars(k);
    for (const auto& f : decompose_local(ak)) factor_product *= enumerate_points(weil_restrict(xk.base_change(f.projection)), k).size();
  }

  return TheoremData{stage,
                     smooth,
                     std::move(smooth_detail),
                     std::move(r),
                     std::move(s),
                     std::move(left),
                     std::move(right),
                     std::move(fibers),
                     std::move(cycle_match),
                     std::move(psi),
                     total,
                     factor_product,
                     eval_eq};
}

TheoremReport verify_theorem(const Case& c) {
  TheoremData d = compute_theorem(c);
  std::vector<CheckOutcome> checks;
  const auto expect_smooth = c.expect.smooth;

  CheckOutcome sm{"smoothness", CheckStatus::Pass, d.smooth_detail};
  if (!d.smooth) sm.status = expect_smooth == false ? CheckStatus::ExpectedFailure : CheckStatus::Fail;
  if (d.smooth && expect_smooth == false) {
    sm.status = CheckStatus::Fail;
    sm.detail = "expected a non-smooth scheme; " + sm.detail;
  }
  checks.push_back(sm);

  std::vector<std::string> problems;
  if (d.left.size() != d.right.size())
    problems.push_back("|pi0(Res)| = " + std::to_string(d.left.size()) + " but the product has " +
                       std::to_string(d.right.size()) + " elements");
  if (!d.cycle_match)
    problems.push_back("cycle types differ: " + join_sizes(d.left.cycle_type()) + " vs " + join_sizes(d.right.cycle_type()));
  else if (!commutes(*d.cycle_match, d.left, d.right))
    problems.push_back("cycle matching is not equivariant");
  if (!d.psi_total) problems.push_back("psi sends a point outside the fibers");
  if (!d.psi.bijective) problems.push_back("psi is not bijective");
  if (!commutes(d.psi, d.left, d.right)) problems.push_back("psi is not Frobenius-equivariant");
  if (!d.evaluation_equivariant) problems.push_back("evaluation map is not equivariant");
  if (d.factor_count_product != d.left.size())
    problems.push_back("count through local factors is " + std::to_string(d.factor_count_product) + ", direct count " +
                       std::to_string(d.left.size()));

  CheckOutcome th{"theorem", CheckStatus::Pass, ""};
  std::string joined;
  for (std::size_t i = 0; i < problems.size(); ++i) joined += (i ? "; " : "") + problems[i];
  if (d.smooth) {
    if (!problems.empty()) th.status = CheckStatus::Fail;
    th.detail = problems.empty() ? std::to_string(d.left.size()) + " components on each side, cycle type " +
                                       join_sizes(d.left.cycle_type())
                                 : joined;
  } else if (expect_smooth == false && !problems.empty()) {
    th.status = CheckStatus::ExpectedFailure;
    th.detail = "not smooth, comparison fails as expected: " + joined;
    if (d.restriction.groebner().is_unit()) th.detail += "; the restricted ideal is (1)";
  } else {
    th.status = CheckStatus::Fail;
    th.detail = problems.empty() ? "not smooth, yet the comparison holds" : "not smooth: " + joined;
  }
  checks.push_back(th);
  return {std::move(d), std::move(checks)};
}

LemmaReport verify_lemma_local(const Case& c) {
  const SchemePresentation x = c.scheme();
  const AlgebraPresentation& a = x.base();
  LemmaReport out;

  // Stage m relative to the base field at which both sides are fully split.
  auto lemma_part = [](const SchemePresentation& xi, const std::string& label) {
    const Field& k = xi.field();
    const GammaSet s = geometric_points(xi.base(), k.degree());
    const unsigned m = checked_stage(lcm_u64(splitting_stage(weil_restrict(xi).algebra()),
                                             splitting_stage(fiber(xi, s.points.at(0), k))) *
                                     k.degree()) /
                       k.degree();
    const ReductionMap rm = reduction_map(xi, m);
    return LemmaReport::Part{label, rm.source.size(), rm.target.size(), rm.map.bijective,
                             commutes(rm.map, rm.source, rm.target)};
  };

  const auto factors = decompose_local(a);
  if (factors.size() == 1 && factors[0].residue_degree == 1) {
    out.variant = "local";
    out.parts.push_back(lemma_part(x, "A"));
  } else {
    out.variant = "factors";
    const Field k = Field::extension(a.field().characteristic(), checked_stage(splitting_stage(a)));
    const SchemePresentation xk = x.extend_scalars(k);
    const auto fk = decompose_local(tensor_extend(a, k));
    for (std::size_t i = 0; i < fk.size(); ++i)
      out.parts.push_back(lemma_part(xk.base_change(fk[i].projection), "factor " + std::to_string(i)));
  }

  bool ok = true;
  std::string detail;
  for (const auto& p : out.parts) {
    ok = ok && p.bijective && p.equivariant;
    detail += (detail.empty() ? "" : "; ") + p.factor + ": " + std::to_string(p.source) + " -> " +
              std::to_string(p.target) + (p.bijective ? " bijective" : " not bijective");
  }
  out.outcome = {"lemma-local", CheckStatus::Pass, out.variant + ": " + detail};
  if (!ok) out.outcome.status = c.expect.smooth == false ? CheckStatus::ExpectedFailure : CheckStatus::Fail;
  return out;
}

namespace {

Json gamma_json(const GammaSet& g) {
  Json j;
  j["ambient"] = g.ambient.name();
  j["frob_exponent"] = g.frob_exponent;
  j["size"] = g.size();
  j["labels"] = g.labels;
  j["frobenius"] = g.frob;
  return j;
}

std::vector<std::string> strings(const std::vector<MPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json inputs_json(const Case& c, const std::string& source) {
  Json j;
  j["source"] = source;
  j["p"] = c.p;
  Json algs = Json::array();
  for (const auto& d : c.algebras) {
    Json a;
    a["name"] = d.name;
    if (d.product_of) {
      a["product_of"] = {d.product_of->first, d.product_of->second};
      a["idempotent"] = d.idempotent_var;
    } else {
      a["vars"] = d.vars;
      a["relations"] = strings(d.relations);
    }
    algs.push_back(a);
  }
  j["algebras"] = algs;
  j["scheme"] = {{"name", c.scheme_name}, {"vars", c.scheme_vars}, {"relations", strings(c.scheme_relations)}};
  return j;
}

Json check_json(const CheckOutcome& o) {
  return {{"name", o.name}, {"status", std::string(to_string(o.status))}, {"detail", o.detail}};
}

constexpr const char* kConvention =
    "left action of x -> x^p; a tuple (u_s) goes to (F u)_{F(s)} = F(u_s); the right-action form is its inverse";

}  // namespace

CaseResult run_case(const Case& c, const std::string& source, const VerifyOptions& opts) {
  CaseResult out;
  out.name = c.name;
  Json timings = Json::object();

  auto timed = [&](const std::string& name, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const Error& e) {
      out.checks.push_back({name, is_resource_guard(e.kind()) ? CheckStatus::Guard : CheckStatus::Fail, e.what()});
    }
    const auto t1 = std::chrono::steady_clock::now();
    timings[name] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  Json j;
  j["case"] = c.name;
  j["inputs"] = inputs_json(c, source);
  for (const char* key : {"dims", "S", "fibers", "restriction", "pi0_left", "pi0_right", "cycle_types", "psi_witness"})
    j[key] = nullptr;

  timed("theorem", [&] {
    const SchemePresentation x = c.scheme();
    const AlgebraPresentation a = x.base();
    TheoremReport tr = verify_theorem(c);
    const TheoremData& d = tr.data;
    if (c.checks.theorem) out.checks.insert(out.checks.end(), tr.checks.begin(), tr.checks.end());

    const AlgebraPresentation b = x.coordinate_ring();
    j["dims"] = {{"dim_A", a.dimension()},
                 {"dim_B", b.is_finite() ? Json(b.dimension()) : Json(nullptr)},
                 {"restricted_vars", d.restriction.ring->nvars()},
                 {"restricted_relations", d.restriction.relations().size()},
                 {"stage", d.stage}};
    j["S"] = gamma_json(d.s);
    Json fib = Json::array();
    for (std::size_t i = 0; i < d.fibers.size(); ++i)
      fib.push_back({{"s", d.s.labels[i]}, {"size", d.fibers[i].size()}, {"points", d.fibers[i].labels}});
    j["fibers"] = fib;
    j["restriction"] = {{"variables", d.restriction.ring->variables()},
                        {"relations", strings(d.restriction.relations())},
                        {"groebner", strings(d.restriction.groebner().polys())},
                        {"empty", is_empty(d.restriction)}};
    j["pi0_left"] = gamma_json(d.left);
    j["pi0_right"] = gamma_json(d.right);
    j["cycle_types"] = {{"S", d.s.cycle_type()}, {"left", d.left.cycle_type()}, {"right", d.right.cycle_type()}};
    Json pairs = Json::array();
    for (std::size_t i = 0; i < d.psi.images.size(); ++i)
      pairs.push_back({d.left.labels[i], d.psi.images[i] < d.right.size() ? d.right.labels[d.psi.images[i]] : ""});
    Json match = nullptr;
    if (d.cycle_match) {
      match = Json::array();
      for (std::size_t i = 0; i < d.cycle_match->images.size(); ++i) match.push_back({i, d.cycle_match->images[i]});
    }
    j["psi_witness"] = {{"convention", kConvention}, {"psi", pairs}, {"cycle_match", match}};

    // Expectations.
    auto render_list = [](const std::vector<std::uint64_t>& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
      return "(" + out + ")";
    };
    auto expect_eq = [&](const std::string& key, const std::string& want, const std::string& got) {
      const bool ok = want == got;
      out.checks.push_back({"expect " + key, ok ? CheckStatus::Pass : CheckStatus::Fail, "want " + want + ", got " + got});
    };
    auto bool_text = [](bool b) { return std::string(b ? "true" : "false"); };
    if (c.expect.s) expect_eq("S", std::to_string(*c.expect.s), std::to_string(d.s.size()));
    if (c.expect.pi0_res) expect_eq("pi0_res", std::to_string(*c.expect.pi0_res), std::to_string(d.left.size()));
    if (c.expect.dim_a) expect_eq("dim_A", std::to_string(*c.expect.dim_a), std::to_string(a.dimension()));
    if (c.expect.smooth) expect_eq("smooth", bool_text(*c.expect.smooth), bool_text(d.smooth));
    if (c.expect.fibers) {
      std::vector<std::uint64_t> got;
      for (const auto& f : d.fibers) got.push_back(f.size());
      expect_eq("fibers", render_list(*c.expect.fibers), render_list(got));
    }
    if (c.expect.cycle_type)
      expect_eq("cycle_type", render_list(*c.expect.cycle_type), render_list(to_u64(d.left.cycle_type())));
  });

  if (c.checks.lemma_local) timed("lemma-local", [&] { out.checks.push_back(verify_lemma_local(c).outcome); });

  for (unsigned m : c.checks.adjunction) {
    const std::string name = "adjunction(" + std::to_string(m) + ")";
    timed(name, [&] {
      const auto rep = adjunction_check(c.scheme(), m, opts.seed);
      out.checks.push_back({name, rep.passed ? CheckStatus::Pass : CheckStatus::Fail,
                            std::to_string(rep.res_points) + " restricted points, " + std::to_string(rep.algebra_points) +
                                " points over A (" + rep.method + ")" + (rep.detail.empty() ? "" : "; " + rep.detail)});
    });
  }

  if (c.checks.product) {
    timed("product", [&] {
      const AlgebraDecl& d = c.base_decl();
      if (!d.product_of) {
        out.checks.push_back({"product", CheckStatus::Fail, "the base algebra is not declared as a product"});
        return;
      }
      const auto prod = product_algebra(c.algebra(d.product_of->first), c.algebra(d.product_of->second), d.idempotent_var);
      const auto rep = product_formula_check(prod, c.scheme());
      std::string counts;
      for (const auto& k : rep.counts)
        counts += (counts.empty() ? "" : ", ") + std::to_string(k.m) + ": " + std::to_string(k.whole) + " = " +
                  std::to_string(k.first) + "*" + std::to_string(k.second);
      out.checks.push_back({"product", rep.passed ? CheckStatus::Pass : CheckStatus::Fail,
                            counts + (rep.detail.empty() ? "" : "; " + rep.detail)});
    });
  }

  if (!c.checks.cover.empty()) {
    timed("cover", [&] {
      const auto rep = open_cover_check(c.scheme(), c.checks.cover, 2, opts.seed);
      std::string detail;
      for (const auto& st : rep.stages)
        detail += (detail.empty() ? "" : ", ") + std::to_string(st.m) + ": " + std::to_string(st.res_points) + " points";
      out.checks.push_back({"cover", rep.passed ? CheckStatus::Pass : CheckStatus::Fail,
                            detail + (rep.detail.empty() ? "" : "; " + rep.detail)});
    });
  }

  Json checks = Json::array();
  for (const auto& o : out.checks) {
    checks.push_back(check_json(o));
    if (o.status == CheckStatus::Guard) out.exit_code = 3;
    if (o.status == CheckStatus::Fail && out.exit_code == 0) out.exit_code = 1;
  }
  j["checks"] = checks;
  j["timings_ms"] = opts.timings ? timings : Json(nullptr);
  j["seed"] = opts.seed;
  out.report = std::move(j);
  return out;
}

SuiteResult run_suite(const std::vector<std::string>& paths, const VerifyOptions& opts) {
  SuiteResult out;
  std::vector<std::pair<Case, std::string>> cases;
  for (const auto& path : paths) {
    try {
      cases.emplace_back(parse_case_file(path), path);
    } catch (const Error& e) {
      out.input_errors.push_back(e.what());
    }
  }
  std::stable_sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.first.name < b.first.name; });
  bool guard = false, fail = false;
  for (const auto& [c, path] : cases) {
    out.cases.push_back(run_case(c, path, opts));
    guard = guard || out.cases.back().exit_code == 3;
    fail = fail || out.cases.back().exit_code != 0;
  }
  out.exit_code = !out.input_errors.empty() ? 2 : guard ? 3 : fail ? 1 : 0;
  return out;
}

Json SuiteResult::to_json() const {
  Json j;
  Json reports = Json::array();
  for (const auto& c : cases) reports.push_back(c.report);
  j["reports"] = reports;
  j["input_errors"] = input_errors;
  std::size_t passed = 0;
  for (const auto& c : cases) passed += c.exit_code == 0;
  j["summary"] = {{"cases", cases.size()}, {"passed", passed}, {"exit_code", exit_code}};
  return j;
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  for (const auto& e : input_errors) os << "error: " << e << "\n";
  std::size_t passed = 0;
  for (const auto& c : cases) {
    const char* tag = c.exit_code == 0 ? "PASS" : c.exit_code == 3 ? "GUARD" : "FAIL";
    os << tag << " " << c.name << "\n";
    for (const auto& o : c.checks) os << "  " << o.name << ": " << to_string(o.status) << " (" << o.detail << ")\n";
    passed += c.exit_code == 0;
  }
  os << passed << "/" << cases.size() << " cases passed";
  if (!input_errors.empty()) os << ", " << input_errors.size() << " input error(s)";
  os << "\n";
  return os.str();
}

}  // namespace resweil
