#include "resweil/groebner.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "resweil/error.hpp"

namespace resweil {

MPoly reduce(const MPoly& f, const std::vector<MPoly>& divisors) {
  const Field& fld = f.field();
  const RingPtr& ring = f.ring();
  std::map<Monomial, FieldElement, MonomialGreater> work;
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto lead = work.begin();
    const MPoly* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead->first)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back({lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const Monomial shift = lead->first.quotient(divisor->leading_monomial());
    const FieldElement c = fld.div(lead->second, divisor->leading().coeff);
    for (const auto& t : divisor->terms()) {
      Monomial m = t.mono * shift;
      const FieldElement delta = fld.mul(c, t.coeff);
      auto it = work.find(m);
      if (it == work.end()) {
        work.emplace(std::move(m), fld.neg(delta));
      } else {
        it->second = fld.sub(it->second, delta);
        if (fld.is_zero(it->second)) work.erase(it);
      }
    }
  }
  return MPoly::from_terms(ring, std::move(remainder));
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero(); }

MPoly GroebnerBasis::normal_form(const MPoly& f) const {
  require_same_ring(*f.ring(), *ring_, "normal_form");
  return reduce(f, basis_);
}

std::optional<std::vector<Monomial>> GroebnerBasis::standard_monomials() const {
  const std::size_t n = ring_->nvars();
  if (is_unit()) return std::vector<Monomial>{};
  // bound[i]: exponent of the pure power of x_i among leading monomials.
  std::vector<unsigned> bound(n, 0);
  for (const auto& g : basis_) {
    const Monomial& lm = g.leading_monomial();
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0) return std::nullopt;

  std::vector<Monomial> out;
  Monomial current(n);
  auto divisible = [&](const Monomial& m) {
    for (const auto& g : basis_)
      if (g.leading_monomial().divides(m)) return true;
    return false;
  };
  // Depth-first over exponent vectors; divisibility is upward closed.
  auto visit = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      if (!divisible(current)) {
        if (out.size() >= kMaxStandardMonomials) {
          throw Error(ErrorKind::SearchGuardExceeded, "more than 10^6 standard monomials");
        }
        out.push_back(current);
      }
      return;
    }
    for (unsigned e = 0; e < bound[var]; ++e) {
      current.set(var, e);
      if (divisible(current)) break;
      self(self, var + 1);
    }
    current.set(var, 0);
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

namespace {

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Field& fld = f.field();
  const MPoly a = f.mul_term(l.quotient(f.leading_monomial()), fld.inv(f.leading().coeff));
  const MPoly b = g.mul_term(l.quotient(g.leading_monomial()), fld.inv(g.leading().coeff));
  return a - b;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<MPoly>& generators, std::size_t step_budget) {
  for (const auto& g : generators) require_same_ring(*g.ring(), *ring, "buchberger");
  const Field& fld = ring->field();
  const MPoly one = MPoly::constant(ring, fld.one());

  std::vector<MPoly> basis;
  std::vector<Pair> pairs;
  // done[i][j] (i < j): pair already handled or discarded.
  std::vector<std::vector<bool>> done;

  auto add = [&](MPoly h) {
    h = h.monic();
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(basis[i].leading_monomial(), h.leading_monomial())});
    basis.push_back(std::move(h));
    for (auto& row : done) row.push_back(false);
    done.emplace_back(basis.size(), false);
  };
  auto handled = [&](std::size_t a, std::size_t b) { return a < b ? done[a][b] : done[b][a]; };

  for (const auto& g : generators) {
    MPoly h = reduce(g, basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis(ring, {one});
    add(std::move(h));
  }

  std::size_t steps = 0;
  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      const int c = degrevlex_compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    const Pair pr = *best;
    pairs.erase(best);
    done[pr.i][pr.j] = true;

    const MPoly& f = basis[pr.i];
    const MPoly& g = basis[pr.j];
    if (coprime(f.leading_monomial(), g.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].leading_monomial().divides(pr.lcm) && handled(pr.i, k) && handled(pr.j, k)) chain = true;
    }
    if (chain) continue;

    if (++steps > step_budget) {
      throw Error(ErrorKind::StepGuardExceeded,
                  "Groebner basis exceeded " + std::to_string(step_budget) + " S-polynomial steps");
    }
    MPoly h = reduce(s_polynomial(f, g), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return GroebnerBasis(ring, {one});
    add(std::move(h));
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce the tails.
  std::vector<MPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term& lt = minimal[i].leading();
    MPoly tail = minimal[i] - MPoly::term(ring, lt.mono, lt.coeff);
    MPoly r = MPoly::term(ring, lt.mono, lt.coeff) + reduce(tail, others);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) {
    return degrevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(ring, std::move(reduced));
}

}  // namespace resweil
