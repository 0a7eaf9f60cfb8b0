#include "resweil/weilres.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "resweil/error.hpp"

namespace resweil {

namespace {

std::string component_name(const std::string& var, std::size_t b) {
  const bool digit_end = !var.empty() && std::isdigit(static_cast<unsigned char>(var.back()));
  return var + (digit_end ? "_" : "") + std::to_string(b);
}

std::vector<std::size_t> iota(std::size_t n, std::size_t start = 0) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = start + i;
  return v;
}

std::vector<MPoly> lift_gb(const AlgebraPresentation& a, const RingPtr& ring) {
  std::vector<MPoly> out;
  const auto idx = iota(a.ring()->nvars());
  for (const auto& g : a.groebner().polys()) out.push_back(map_into(g, ring, idx));
  return out;
}

bool vec_less(const Field& f, const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = f.compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

struct PointLess {
  const Field* f;
  bool operator()(const Point& a, const Point& b) const { return vec_less(*f, a, b); }
};

}  // namespace

// ---------------------------------------------------------------------------
// Restriction

std::vector<MPoly> RestrictedScheme::relations() const {
  std::vector<MPoly> out;
  for (const auto& row : components) out.insert(out.end(), row.begin(), row.end());
  return out;
}

RingPtr RestrictedScheme::combined_ring() const {
  std::vector<std::string> vars = scheme.base().ring()->variables();
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return make_ring(field(), vars);
}

std::vector<MPoly> RestrictedScheme::expansion(const RingPtr& combined) const {
  const std::size_t n = scheme.num_base_vars();
  const auto tidx = iota(n);
  std::vector<MPoly> out;
  for (std::size_t j = 0; j < scheme.num_scheme_vars(); ++j) {
    MPoly y(combined);
    for (std::size_t b = 0; b < basis.size(); ++b)
      y = y + MPoly::variable(combined, n + var_index(j, b)) * map_into(basis[b], combined, tidx);
    out.push_back(y);
  }
  return out;
}

bool RestrictedScheme::round_trip() const {
  const RingPtr comb = combined_ring();
  const std::size_t n = scheme.num_base_vars();
  const auto gb = lift_gb(scheme.base(), comb);
  const auto exp = expansion(comb);
  std::vector<MPoly> images;
  for (std::size_t l = 0; l < n; ++l) images.push_back(MPoly::variable(comb, l));
  images.insert(images.end(), exp.begin(), exp.end());
  const auto tidx = iota(n);
  const auto yidx = iota(ring->nvars(), n);
  for (std::size_t i = 0; i < components.size(); ++i) {
    MPoly lhs(comb);
    for (std::size_t b = 0; b < basis.size(); ++b)
      lhs = lhs + map_into(components[i][b], comb, yidx) * map_into(basis[b], comb, tidx);
    const MPoly rhs = substitute_expand(scheme.relations()[i], images, comb);
    if (!reduce(lhs - rhs, gb).is_zero()) return false;
  }
  return true;
}

RestrictedScheme weil_restrict(const SchemePresentation& x, const std::optional<std::vector<MPoly>>& custom) {
  const AlgebraPresentation& a = x.base();
  if (a.is_zero_ring()) throw Error(ErrorKind::EmptyBase, "cannot restrict along the zero ring");
  const std::size_t d = a.dimension();
  const Field& k = a.field();
  const std::size_t n = a.ring()->nvars();
  const std::size_t r = x.num_scheme_vars();

  std::vector<MPoly> basis;
  std::optional<Matrix> to_custom;  // standard coordinates -> custom coordinates
  if (custom) {
    if (custom->size() != d) throw Error(ErrorKind::Internal, "basis has the wrong size");
    Matrix c(k, d, d);
    for (std::size_t b = 0; b < d; ++b) {
      basis.push_back(a.normal_form((*custom)[b]));
      c.set_column(b, a.coordinates(basis.back()));
    }
    Matrix inv(k, d, d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec e(d);
      e[b] = k.one();
      auto col = solve(c, e);
      if (!col) throw Error(ErrorKind::Internal, "custom basis is linearly dependent");
      inv.set_column(b, *col);
    }
    to_custom = inv;
  } else {
    for (std::size_t b = 0; b < d; ++b) basis.push_back(a.basis_element(b));
  }

  std::vector<std::string> names;
  for (const auto& v : x.scheme_vars())
    for (std::size_t b = 0; b < d; ++b) names.push_back(component_name(v, b));
  {
    std::set<std::string> seen(a.ring()->variables().begin(), a.ring()->variables().end());
    for (const auto& s : names)
      if (!seen.insert(s).second) throw Error(ErrorKind::Internal, "restricted variable name clash: " + s);
  }

  RestrictedScheme res{x, basis, make_ring(k, names), {}};
  const RingPtr comb = res.combined_ring();
  const auto gb = lift_gb(a, comb);
  const auto exp = res.expansion(comb);
  std::vector<MPoly> images;
  for (std::size_t l = 0; l < n; ++l) images.push_back(MPoly::variable(comb, l));
  images.insert(images.end(), exp.begin(), exp.end());

  std::map<Monomial, Vec, MonomialLess> coord_cache;
  auto coords_of = [&](const Monomial& tpart) -> const Vec& {
    auto it = coord_cache.find(tpart);
    if (it != coord_cache.end()) return it->second;
    Vec v = a.coordinates(MPoly::term(a.ring(), tpart, k.one()));
    if (to_custom) v = to_custom->apply(v);
    return coord_cache.emplace(tpart, std::move(v)).first->second;
  };

  for (const auto& g : x.relations()) {
    const MPoly h = reduce(substitute_expand(g, images, comb), gb);
    std::vector<std::vector<Term>> parts(d);
    for (const auto& t : h.terms()) {
      Monomial tpart(n), ypart(r * d);
      for (std::size_t l = 0; l < n; ++l) tpart.set(l, t.mono[l]);
      for (std::size_t l = 0; l < r * d; ++l) ypart.set(l, t.mono[n + l]);
      const Vec& c = coords_of(tpart);
      for (std::size_t b = 0; b < d; ++b)
        if (!k.is_zero(c[b])) parts[b].push_back({ypart, k.mul(t.coeff, c[b])});
    }
    std::vector<MPoly> row;
    for (auto& p : parts) row.push_back(MPoly::from_terms(res.ring, std::move(p)));
    res.components.push_back(std::move(row));
  }
  return res;
}

bool is_empty(const RestrictedScheme& r) { return r.groebner().is_unit(); }

// ---------------------------------------------------------------------------
// Point enumeration

namespace {

std::vector<Point> exhaustive(const std::vector<MPoly>& system, std::size_t nvars, const Field& k) {
  const std::uint64_t q = k.order().value_or(kMaxSearchSpace + 1);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (space > kMaxSearchSpace / q) throw Error(ErrorKind::SearchGuardExceeded, "exhaustive search space exceeds 10^6");
    space *= q;
  }
  std::vector<Point> out;
  Point pt(nvars);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = nvars; i-- > 0;) {
      pt[i] = k.element_at(v % q);
      v /= q;
    }
    bool ok = true;
    for (const auto& g : system) {
      if (!k.is_zero(evaluate(g, pt, k))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(pt);
  }
  return out;
}

UniPoly minimal_polynomial_of_var(const GroebnerBasis& gb, const std::vector<Monomial>& sm, std::size_t var) {
  const RingPtr& ring = gb.ring();
  const Field& k = ring->field();
  std::map<Monomial, std::size_t, MonomialLess> index;
  for (std::size_t i = 0; i < sm.size(); ++i) index.emplace(sm[i], i);
  Monomial xv(ring->nvars());
  xv.set(var, 1);
  auto apply = [&](const Vec& v) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < sm.size(); ++i)
      if (!k.is_zero(v[i])) terms.push_back({sm[i] * xv, v[i]});
    const MPoly nf = gb.normal_form(MPoly::from_terms(ring, std::move(terms)));
    Vec out(sm.size());
    for (const auto& t : nf.terms()) out[index.at(t.mono)] = t.coeff;
    return out;
  };
  Vec one(sm.size());
  one[0] = k.one();  // sm[0] is the monomial 1
  return krylov_minimal_polynomial(k, one, apply);
}

void back_substitute(const RingPtr& ring, std::vector<MPoly> gens, std::size_t var, Point& prefix,
                     std::vector<Point>& out) {
  const GroebnerBasis gb = buchberger(ring, gens);
  if (gb.is_unit()) return;
  if (var == ring->nvars()) {
    out.push_back(prefix);
    return;
  }
  const auto sm = gb.standard_monomials();
  if (!sm) throw Error(ErrorKind::Internal, "zero-dimensional system became infinite");
  const UniPoly mu = minimal_polynomial_of_var(gb, *sm, var);
  const Field& k = ring->field();
  for (const auto& root : roots_in(mu, k)) {
    std::vector<MPoly> next = gb.polys();
    next.push_back(MPoly::variable(ring, var) - MPoly::constant(ring, root));
    prefix.push_back(root);
    back_substitute(ring, std::move(next), var + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Point> enumerate_points(const std::vector<MPoly>& system, const RingPtr& ring, const Field& k) {
  for (const auto& g : system) require_same_ring(*g.ring(), *ring, "enumerate_points");
  const GroebnerBasis gb = buchberger(ring, system);
  if (gb.is_unit()) return {};
  const RingPtr ring_k = ring->field() == k ? ring : make_ring(k, ring->variables());
  const auto idx = iota(ring->nvars());
  std::vector<MPoly> gens;
  for (const auto& g : gb.polys()) gens.push_back(map_into(g, ring_k, idx));
  std::vector<Point> out;
  if (gb.standard_monomials()) {
    Point prefix;
    back_substitute(ring_k, std::move(gens), 0, prefix, out);
  } else {
    out = exhaustive(gens, ring->nvars(), k);
  }
  std::sort(out.begin(), out.end(), PointLess{&k});
  return out;
}

std::vector<Point> enumerate_points(const RestrictedScheme& r, const Field& k) {
  return enumerate_points(r.relations(), r.ring, k);
}

AlgebraPoint regroup(const RestrictedScheme& r, const Point& p, const Field& k) {
  const AlgebraPresentation& a = r.scheme.base();
  const std::size_t d = r.dimension();
  std::vector<Vec> basis_coords;
  for (const auto& e : r.basis) {
    Vec c = a.coordinates(e);
    for (auto& x : c) x = embed(a.field(), x, k);
    basis_coords.push_back(std::move(c));
  }
  AlgebraPoint out;
  for (std::size_t j = 0; j < r.scheme.num_scheme_vars(); ++j) {
    Vec u(d);
    for (std::size_t b = 0; b < d; ++b) {
      const FieldElement& c = p[r.var_index(j, b)];
      for (std::size_t i = 0; i < d; ++i) u[i] = k.add(u[i], k.mul(c, basis_coords[b][i]));
    }
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace resweil
