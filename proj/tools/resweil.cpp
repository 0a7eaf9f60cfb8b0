#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resweil/error.hpp"
#include "resweil/verifier.hpp"

using namespace resweil;

namespace {

void print_gamma(std::ostream& os, const std::string& title, const GammaSet& g) {
  os << title << ": " << g.size() << " element(s) in " << g.ambient.name() << ", Frobenius x -> x^(p^"
     << g.frob_exponent << ")\n";
  for (const auto& cyc : g.cycles()) {
    os << "  cycle";
    for (std::size_t i : cyc) os << " " << g.labels[i];
    os << "\n";
  }
}

int cmd_restrict(const std::string& path) {
  const Case c = parse_case_file(path);
  const RestrictedScheme r = weil_restrict(c.scheme());
  std::cout << "Res of " << c.scheme_name << " over " << c.base_decl().name << " (dim " << r.dimension() << ") over "
            << r.field().name() << "\n";
  std::cout << "basis:";
  for (const auto& e : r.basis) std::cout << " " << e.to_string();
  std::cout << "\nvars:";
  for (const auto& v : r.ring->variables()) std::cout << " " << v;
  std::cout << "\nrelations:\n";
  for (const auto& g : r.relations()) std::cout << "  " << g.to_string() << "\n";
  const auto gb = r.groebner();
  std::cout << "groebner basis:\n";
  for (const auto& g : gb.polys()) std::cout << "  " << g.to_string() << "\n";
  std::cout << (gb.is_unit() ? "empty\n" : "nonempty\n");
  return 0;
}

int cmd_pi0(const std::string& path) {
  const Case c = parse_case_file(path);
  const TheoremData d = compute_theorem(c);
  std::cout << "stage F_" << c.p << "^" << d.stage << "; " << (d.smooth ? "smooth" : "not smooth") << " ("
            << d.smooth_detail << ")\n";
  print_gamma(std::cout, "S", d.s);
  for (std::size_t i = 0; i < d.fibers.size(); ++i)
    std::cout << "fiber over " << d.s.labels[i] << ": " << d.fibers[i].size() << " point(s)\n";
  print_gamma(std::cout, "pi0(Res)", d.left);
  print_gamma(std::cout, "product of fibers", d.right);
  std::cout << (d.cycle_match ? "isomorphic" : "not isomorphic") << "\n";
  return 0;
}

int cmd_points(const std::string& path, unsigned m) {
  const Case c = parse_case_file(path);
  const RestrictedScheme r = weil_restrict(c.scheme());
  const Field k = Field::extension(c.p, m);
  const auto pts = enumerate_points(r, k);
  std::cout << pts.size() << " point(s) of Res over " << k.name() << "\n";
  const AlgebraPresentation& a = r.scheme.base();
  for (const auto& pt : pts) {
    std::cout << " (";
    for (std::size_t i = 0; i < pt.size(); ++i) std::cout << (i ? ", " : "") << k.to_string(pt[i]);
    std::cout << ") ->";
    const AlgebraPoint u = regroup(r, pt, k);
    for (std::size_t j = 0; j < u.size(); ++j) {
      std::cout << " " << c.scheme_vars[j] << " = ";
      bool first = true;
      for (std::size_t b = 0; b < u[j].size(); ++b) {
        if (k.is_zero(u[j][b])) continue;
        std::cout << (first ? "" : " + ") << "(" << k.to_string(u[j][b]) << ")*" << a.basis_element(b).to_string();
        first = false;
      }
      if (first) std::cout << "0";
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil restriction and component Galois sets over finite algebras"};
  app.require_subcommand(1);

  std::string file;
  auto* restrict_cmd = app.add_subcommand("restrict", "print the restricted presentation");
  restrict_cmd->add_option("file", file, "case file")->required();

  auto* pi0_cmd = app.add_subcommand("pi0", "print both component sets with Frobenius");
  pi0_cmd->add_option("file", file, "case file")->required();

  unsigned ext = 1;
  auto* points_cmd = app.add_subcommand("points", "list points of the restriction over F_{p^m}");
  points_cmd->add_option("file", file, "case file")->required();
  points_cmd->add_option("--ext", ext, "extension degree m")->check(CLI::Range(1U, kMaxExtensionDegree));

  std::vector<std::string> files;
  VerifyOptions opts;
  bool json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the checks enabled in each case file");
  verify_cmd->add_option("files", files, "case files")->required();
  verify_cmd->add_flag("--json", json, "print the JSON report");
  verify_cmd->add_option("--seed", opts.seed, "seed for randomized steps");
  verify_cmd->add_flag("--timings", opts.timings, "include timings_ms in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*restrict_cmd) return cmd_restrict(file);
    if (*pi0_cmd) return cmd_pi0(file);
    if (*points_cmd) return cmd_points(file, ext);
    const SuiteResult res = run_suite(files, opts);
    if (json) {
      std::cout << res.to_json().dump(2) << "\n";
      for (const auto& e : res.input_errors) std::cerr << e << "\n";
    } else {
      std::cout << res.to_text();
    }
    return res.exit_code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    // Precondition failures (empty base, non-finite presentations) count as bad input.
    return is_resource_guard(e.kind()) ? 3 : 2;
  }
}
