#include <algorithm>
#include <map>
#include <set>

#include "resweil/error.hpp"
#include "resweil/weilres.hpp"

namespace resweil {

namespace {

Field extension_of(const Field& k, unsigned m) { return Field::extension(k.characteristic(), k.degree() * m); }

bool vec_less(const Field& f, const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = f.compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

Vec flatten(const AlgebraPoint& u) {
  Vec out;
  for (const auto& v : u) out.insert(out.end(), v.begin(), v.end());
  return out;
}

struct FlatLess {
  const Field* f;
  bool operator()(const Vec& a, const Vec& b) const { return vec_less(*f, a, b); }
};

// Values of the combined generators (t..., y...) inside A ⊗ K.
std::vector<Vec> combined_values(const AlgebraArith& ar, std::size_t nbase, const AlgebraPoint& u) {
  std::vector<Vec> vals;
  for (std::size_t l = 0; l < nbase; ++l) vals.push_back(ar.generator(l));
  vals.insert(vals.end(), u.begin(), u.end());
  return vals;
}

bool solves(const AlgebraArith& ar, const SchemePresentation& x, const AlgebraPoint& u) {
  const auto vals = combined_values(ar, x.num_base_vars(), u);
  for (const auto& g : x.relations())
    if (!ar.is_zero(ar.evaluate(g, vals))) return false;
  return true;
}

// Determinant of a square matrix of algebra elements.
Vec alg_det(const AlgebraArith& ar, const std::vector<std::vector<Vec>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return ar.one();
  if (n == 1) return m[0][0];
  Vec det = ar.zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Vec>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Vec> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Vec term = ar.mul(m[0][c], alg_det(ar, minor));
    det = (c % 2 == 0) ? ar.add(det, term) : ar.sub(det, term);
  }
  return det;
}

// adj[j][i] = (-1)^{i+j} det(minor without row i, column j)
std::vector<std::vector<Vec>> alg_adjugate(const AlgebraArith& ar, const std::vector<std::vector<Vec>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Vec>> adj(n, std::vector<Vec>(n));
  if (n == 1) {
    adj[0][0] = ar.one();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Vec>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Vec> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const Vec d = alg_det(ar, minor);
      adj[j][i] = ((i + j) % 2 == 0) ? d : ar.sub(ar.zero(), d);
    }
  }
  return adj;
}

std::vector<Vec> image_basis(const Matrix& phi, const Vec& e, const AlgebraArith& ar) {
  const std::size_t d = ar.dimension();
  Matrix img(ar.field(), d, d);
  for (std::size_t b = 0; b < d; ++b) {
    Vec eb(d);
    eb[b] = ar.field().one();
    img.set_column(b, phi.apply(ar.mul(e, eb)));
  }
  // Column space: pivots of the reduced transpose give independent rows.
  Matrix t(ar.field(), d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) t.at(r, c) = img.at(c, r);
  const auto piv = row_reduce(t);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Vec v(d);
    for (std::size_t c = 0; c < d; ++c) v[c] = t.at(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > kMaxSearchSpace / q) throw Error(ErrorKind::SearchGuardExceeded, "algebra point search exceeds 10^6");
    out *= q;
  }
  return out;
}

// Solutions inside one local factor e*A_K by Hensel lifting from the
// Teichmueller subfield. Returns nullopt when the Jacobian degenerates.
std::optional<std::vector<AlgebraPoint>> local_solutions(const AlgebraArith& ar, const SchemePresentation& x,
                                                         const Vec& e, const Matrix& phi) {
  const Field& k = ar.field();
  const std::size_t r = x.num_scheme_vars();
  const std::size_t nb = x.num_base_vars();
  const auto teich = image_basis(phi, e, ar);
  const std::uint64_t q = *k.order();
  const std::uint64_t per_coord = checked_pow(q, teich.size());
  const std::uint64_t total = checked_pow(per_coord, r);

  std::vector<std::vector<MPoly>> jac(x.relations().size());
  for (std::size_t i = 0; i < x.relations().size(); ++i)
    for (std::size_t j = 0; j < r; ++j) jac[i].push_back(partial_derivative(x.relations()[i], x.scheme_index(j)));

  const Vec one_minus_e = ar.sub(ar.one(), e);
  auto element = [&](std::uint64_t idx) {
    Vec v = ar.zero();
    for (const auto& t : teich) {
      v = ar.add(v, ar.scale(t, k.element_at(idx % q)));
      idx /= q;
    }
    return v;
  };
  auto residuals = [&](const AlgebraPoint& u) {
    const auto vals = combined_values(ar, nb, u);
    std::vector<Vec> out;
    for (const auto& g : x.relations()) out.push_back(ar.mul(e, ar.evaluate(g, vals)));
    return out;
  };

  std::vector<AlgebraPoint> out;
  std::set<Vec, FlatLess> seen{FlatLess{&k}};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    AlgebraPoint u(r);
    std::uint64_t v = idx;
    for (std::size_t j = 0; j < r; ++j) {
      u[j] = element(v % per_coord);
      v /= per_coord;
    }
    auto res = residuals(u);
    // Residue-field solution: every residual is nilpotent.
    bool candidate = true;
    for (const auto& g : res)
      if (!ar.is_zero(phi.apply(g))) candidate = false;
    if (!candidate) continue;

    for (std::size_t iter = 0;; ++iter) {
      // The Jacobian must be invertible at every residue solution, even one
      // that is already exact; otherwise lifts are not unique.
      const auto vals = combined_values(ar, nb, u);
      std::vector<std::vector<Vec>> jm(r, std::vector<Vec>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) jm[i][j] = ar.mul(e, ar.evaluate(jac[i][j], vals));
      const Vec det = alg_det(ar, jm);
      auto inv = ar.inverse(ar.add(det, one_minus_e));
      if (!inv) return std::nullopt;
      bool done = true;
      for (const auto& g : res)
        if (!ar.is_zero(g)) done = false;
      if (done) break;
      if (iter > 64) throw Error(ErrorKind::Internal, "Hensel lifting did not converge");
      const Vec det_inv = ar.mul(*inv, e);
      const auto adj = alg_adjugate(ar, jm);
      for (std::size_t j = 0; j < r; ++j) {
        Vec step = ar.zero();
        for (std::size_t i = 0; i < r; ++i) step = ar.add(step, ar.mul(adj[j][i], res[i]));
        u[j] = ar.sub(u[j], ar.mul(step, det_inv));
      }
      res = residuals(u);
    }
    if (seen.insert(flatten(u)).second) out.push_back(std::move(u));
  }
  return out;
}

std::vector<AlgebraPoint> exhaustive_algebra_points(const AlgebraArith& ar, const SchemePresentation& x) {
  const Field& k = ar.field();
  const std::size_t d = ar.dimension();
  const std::size_t r = x.num_scheme_vars();
  const std::uint64_t q = *k.order();
  const std::uint64_t total = checked_pow(q, d * r);
  std::vector<AlgebraPoint> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    AlgebraPoint u(r, Vec(d));
    std::uint64_t v = idx;
    for (std::size_t j = r; j-- > 0;)
      for (std::size_t b = d; b-- > 0;) {
        u[j][b] = k.element_at(v % q);
        v /= q;
      }
    if (solves(ar, x, u)) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

AlgebraPoints algebra_points(const SchemePresentation& x, const Field& k, std::uint64_t seed) {
  const SchemePresentation xk = x.extend_scalars(k);
  const AlgebraPresentation& ak = xk.base();
  if (ak.is_zero_ring()) throw Error(ErrorKind::EmptyBase, "base algebra is the zero ring");
  const AlgebraArith ar(ak);
  const std::size_t r = xk.num_scheme_vars();
  AlgebraPoints result;

  if (r == 0) {
    result.method = "direct";
    if (solves(ar, xk, {})) result.points.push_back({});
    return result;
  }

  const bool square = xk.relations().size() == r;
  if (square) {
    const auto factors = decompose_local(ak, seed);
    Matrix frob = ar.frobenius_matrix();
    Matrix phi = frob;
    {
      const BigInt q = field_order(k);
      BigInt qn = q;
      while (qn < BigInt(ar.dimension())) {
        phi = phi * frob;
        qn *= q;
      }
    }
    std::vector<std::vector<AlgebraPoint>> per_factor;
    bool ok = true;
    for (const auto& f : factors) {
      auto sols = local_solutions(ar, xk, ar.from_poly(f.idempotent), phi);
      if (!sols) {
        ok = false;
        break;
      }
      per_factor.push_back(std::move(*sols));
    }
    if (ok) {
      std::uint64_t total = 1;
      for (const auto& s : per_factor) {
        if (s.empty()) {
          total = 0;
          break;
        }
        if (total > kMaxSearchSpace / s.size()) throw Error(ErrorKind::SearchGuardExceeded, "too many algebra points");
        total *= s.size();
      }
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        AlgebraPoint u(r, ar.zero());
        std::uint64_t v = idx;
        for (const auto& s : per_factor) {
          const auto& pick = s[v % s.size()];
          v /= s.size();
          for (std::size_t j = 0; j < r; ++j) u[j] = ar.add(u[j], pick[j]);
        }
        result.points.push_back(std::move(u));
      }
      result.method = "hensel";
    }
  }
  if (result.method.empty()) {
    result.points = exhaustive_algebra_points(ar, xk);
    result.method = "exhaustive";
  }
  std::sort(result.points.begin(), result.points.end(),
            [&](const AlgebraPoint& a, const AlgebraPoint& b) { return vec_less(k, flatten(a), flatten(b)); });
  return result;
}

AdjunctionReport adjunction_check(const SchemePresentation& x, unsigned m, std::uint64_t seed) {
  AdjunctionReport rep;
  rep.m = m;
  const Field k = extension_of(x.field(), m);
  const RestrictedScheme res = weil_restrict(x);
  const auto pts = enumerate_points(res, k);
  const auto alg = algebra_points(x, k, seed);
  rep.res_points = pts.size();
  rep.algebra_points = alg.points.size();
  rep.method = alg.method;

  const SchemePresentation xk = x.extend_scalars(k);
  const AlgebraArith ar(xk.base());
  std::set<Vec, FlatLess> alg_set{FlatLess{&k}};
  for (const auto& u : alg.points) alg_set.insert(flatten(u));
  std::set<Vec, FlatLess> res_images{FlatLess{&k}};

  rep.forward_ok = true;
  for (const auto& p : pts) {
    const AlgebraPoint u = regroup(res, p, k);
    if (!solves(ar, xk, u) || !alg_set.count(flatten(u))) {
      rep.forward_ok = false;
      rep.detail = "a restricted point does not regroup to a solution over A ⊗ K";
    }
    res_images.insert(flatten(u));
  }
  // With the standard basis, ungrouping is reading off coordinates.
  rep.backward_ok = res_images.size() == pts.size();
  for (const auto& u : alg.points) {
    if (!res_images.count(flatten(u))) {
      rep.backward_ok = false;
      rep.detail = "a solution over A ⊗ K has no restricted point";
    }
  }
  rep.passed = rep.forward_ok && rep.backward_ok && rep.res_points == rep.algebra_points;
  if (rep.passed) {
    rep.detail = std::to_string(rep.res_points) + " = " + std::to_string(rep.algebra_points);
  } else if (rep.detail.empty()) {
    rep.detail = "counts differ: " + std::to_string(rep.res_points) + " vs " + std::to_string(rep.algebra_points);
  }
  return rep;
}

ProductFormulaReport product_formula_check(const ProductPresentation& prod, const SchemePresentation& x,
                                           unsigned max_m) {
  ProductFormulaReport rep;
  const SchemePresentation x1 = x.base_change(prod.to_first);
  const SchemePresentation x2 = x.base_change(prod.to_second);
  const RestrictedScheme r = weil_restrict(x);
  const RestrictedScheme r1 = weil_restrict(x1);
  const RestrictedScheme r2 = weil_restrict(x2);
  const Field& k = x.field();
  const std::size_t d = r.dimension(), d1 = r1.dimension(), d2 = r2.dimension();
  const std::size_t nv = x.num_scheme_vars();

  // Columns: coordinates of (pi_1(e_b), pi_2(e_b)).
  Matrix mt(k, d1 + d2, d);
  for (std::size_t b = 0; b < d; ++b) {
    const Vec c1 = prod.to_first.target.coordinates(prod.to_first.apply(r.basis[b]));
    const Vec c2 = prod.to_second.target.coordinates(prod.to_second.apply(r.basis[b]));
    for (std::size_t c = 0; c < d1; ++c) mt.at(c, b) = c1[c];
    for (std::size_t c = 0; c < d2; ++c) mt.at(d1 + c, b) = c2[c];
  }
  rep.change_of_basis_invertible = d1 + d2 == d && rank(mt) == d;

  // y^{(1)}_{j,c} = sum_b M[c][b] y_{j,b}, likewise for the second factor.
  auto images = [&](std::size_t offset, std::size_t dim) {
    std::vector<MPoly> out;
    for (std::size_t j = 0; j < nv; ++j)
      for (std::size_t c = 0; c < dim; ++c) {
        MPoly v(r.ring);
        for (std::size_t b = 0; b < d; ++b)
          v = v + MPoly::variable(r.ring, r.var_index(j, b)).scale(mt.at(offset + c, b));
        out.push_back(v);
      }
    return out;
  };
  const auto im1 = images(0, d1), im2 = images(d1, d2);
  std::vector<MPoly> pulled;
  for (const auto& g : r1.relations()) pulled.push_back(substitute_expand(g, im1, r.ring));
  for (const auto& g : r2.relations()) pulled.push_back(substitute_expand(g, im2, r.ring));
  rep.ideals_equal = rep.change_of_basis_invertible && buchberger(r.ring, pulled) == r.groebner();

  bool counts_ok = true;
  for (unsigned m = 1; m <= max_m; ++m) {
    const Field km = extension_of(k, m);
    ProductFormulaReport::Count c{m, enumerate_points(r, km).size(), enumerate_points(r1, km).size(),
                                  enumerate_points(r2, km).size()};
    if (c.whole != c.first * c.second) counts_ok = false;
    rep.counts.push_back(c);
  }
  rep.passed = rep.change_of_basis_invertible && rep.ideals_equal && counts_ok;
  if (!rep.change_of_basis_invertible) {
    rep.detail = "projections do not identify A with A1 x A2";
  } else if (!rep.ideals_equal) {
    rep.detail = "pulled-back product ideal differs from the restricted ideal";
  } else if (!counts_ok) {
    rep.detail = "point counts are not multiplicative";
  } else {
    rep.detail = "isomorphic presentations, counts multiplicative";
  }
  return rep;
}

CoverReport open_cover_check(const SchemePresentation& x, const std::vector<MPoly>& cover, unsigned max_m,
                             std::uint64_t seed) {
  const AlgebraPresentation& a = x.base();
  if (a.is_zero_ring()) throw Error(ErrorKind::EmptyBase, "base algebra is the zero ring");
  const auto factors = decompose_local(a, seed);
  if (factors.size() != 1 || factors[0].residue_degree != 1) {
    throw Error(ErrorKind::NotLocalBase, "open cover check needs a local base with residue field k");
  }
  for (const auto& h : cover) require_same_ring(*h.ring(), *x.ring(), "cover element");
  {
    std::vector<MPoly> gens = x.coordinate_ring().groebner().polys();
    gens.insert(gens.end(), cover.begin(), cover.end());
    if (!buchberger(x.ring(), gens).is_unit()) throw Error(ErrorKind::NotCovering, "cover does not generate the unit ideal of B");
  }

  std::string z = "z";
  while (x.ring()->index_of(z)) z += "'";
  std::vector<std::string> vars = x.scheme_vars();
  vars.push_back(z);
  std::vector<std::string> all = x.ring()->variables();
  all.push_back(z);
  const RingPtr ring_z = make_ring(x.field(), all);
  std::vector<std::size_t> idx(x.ring()->nvars());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  const RestrictedScheme res = weil_restrict(x);
  std::vector<RestrictedScheme> pieces;
  for (const auto& h : cover) {
    std::vector<MPoly> rels;
    for (const auto& g : x.relations()) rels.push_back(map_into(g, ring_z, idx));
    rels.push_back(MPoly::variable(ring_z, all.size() - 1) * map_into(h, ring_z, idx) - MPoly::constant(ring_z, 1));
    pieces.push_back(weil_restrict(SchemePresentation::from_named(a, vars, rels)));
  }

  CoverReport rep;
  rep.passed = true;
  const std::size_t nres = res.ring->nvars();
  for (unsigned m = 1; m <= max_m; ++m) {
    const Field k = extension_of(x.field(), m);
    const auto pts = enumerate_points(res, k);
    const SchemePresentation xk = x.extend_scalars(k);
    const AlgebraArith ar(xk.base());
    CoverReport::Stage st{m, pts.size(), {}, true, true};
    std::set<Vec, FlatLess> covered{FlatLess{&k}};
    for (std::size_t h = 0; h < cover.size(); ++h) {
      std::set<Vec, FlatLess> lifted{FlatLess{&k}};
      for (const auto& q : enumerate_points(pieces[h], k)) lifted.insert(Vec(q.begin(), q.begin() + nres));
      std::set<Vec, FlatLess> units{FlatLess{&k}};
      const MPoly hk = map_into(cover[h], xk.ring());
      for (const auto& p : pts) {
        const auto vals = combined_values(ar, xk.num_base_vars(), regroup(res, p, k));
        if (ar.is_unit(ar.evaluate(hk, vals))) units.insert(p);
      }
      st.lifts.push_back(lifted.size());
      if (lifted != units) st.lifts_match_units = false;
      covered.insert(lifted.begin(), lifted.end());
    }
    st.covered = covered.size() == pts.size();
    for (const auto& p : pts)
      if (!covered.count(p)) st.covered = false;
    rep.passed = rep.passed && st.lifts_match_units && st.covered;
    rep.stages.push_back(std::move(st));
  }
  rep.detail = rep.passed ? "every point lifts exactly where h is a unit; the pieces cover"
                          : "lifts disagree with the unit test or the pieces do not cover";
  return rep;
}

}  // namespace resweil
