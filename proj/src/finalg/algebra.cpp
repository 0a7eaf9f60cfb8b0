#include "resweil/algebra.hpp"

#include <algorithm>
#include <random>

#include "resweil/error.hpp"

namespace resweil {

// ---------------------------------------------------------------------------
// AlgebraPresentation

std::shared_ptr<const AlgebraPresentation::Data> AlgebraPresentation::build(RingPtr ring, std::vector<MPoly> relations,
                                                                              GroebnerBasis gb) {
  for (const auto& r : relations) require_same_ring(*r.ring(), *ring, "algebra relation");
  auto d = std::make_shared<Data>(Data{ring, std::move(relations), std::move(gb), std::nullopt, {}});
  d->basis = d->gb.standard_monomials();
  if (d->basis) {
    for (std::size_t i = 0; i < d->basis->size(); ++i) d->index.emplace((*d->basis)[i], i);
  }
  return d;
}

AlgebraPresentation::AlgebraPresentation(RingPtr ring, std::vector<MPoly> relations)
    : d_(build(ring, relations, buchberger(ring, relations))) {}

AlgebraPresentation::AlgebraPresentation(RingPtr ring, std::vector<MPoly> relations, GroebnerBasis gb)
    : d_(build(std::move(ring), std::move(relations), std::move(gb))) {}

AlgebraPresentation AlgebraPresentation::make(const Field& field, std::vector<std::string> vars,
                                              std::vector<MPoly> relations) {
  return AlgebraPresentation(make_ring(field, std::move(vars)), std::move(relations));
}

const std::vector<Monomial>& AlgebraPresentation::basis() const {
  if (!d_->basis) throw Error(ErrorKind::NotFinite, "algebra is not finite over its base field");
  return *d_->basis;
}

MPoly AlgebraPresentation::basis_element(std::size_t b) const {
  return MPoly::term(d_->ring, basis().at(b), field().one());
}

Vec AlgebraPresentation::coordinates(const MPoly& f) const {
  const auto& bs = basis();
  Vec v(bs.size());
  const MPoly nf = normal_form(f);
  for (const auto& t : nf.terms()) {
    auto it = d_->index.find(t.mono);
    if (it == d_->index.end()) throw Error(ErrorKind::Internal, "normal form left the standard basis");
    v[it->second] = t.coeff;
  }
  return v;
}

MPoly AlgebraPresentation::from_coordinates(const Vec& v) const {
  const auto& bs = basis();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < bs.size() && i < v.size(); ++i) {
    if (!field().is_zero(v[i])) terms.push_back({bs[i], v[i]});
  }
  return MPoly::from_terms(d_->ring, std::move(terms));
}

DimensionAndBasis dimension_and_basis(const AlgebraPresentation& a) {
  const auto& b = a.basis();
  return {b.size(), b};
}

// ---------------------------------------------------------------------------
// AlgebraArith

AlgebraArith::AlgebraArith(const AlgebraPresentation& a) : a_(a), dim_(a.dimension()) {
  table_.reserve(dim_ * dim_);
  const auto& bs = a_.basis();
  const Field& f = a_.field();
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j < i) {
        table_.push_back(table_[j * dim_ + i]);
      } else {
        table_.push_back(a_.coordinates(MPoly::term(a_.ring(), bs[i] * bs[j], f.one())));
      }
    }
  }
}

Vec AlgebraArith::one() const { return constant(field().one()); }

Vec AlgebraArith::constant(const FieldElement& c) const {
  return a_.coordinates(MPoly::constant(a_.ring(), c));
}

Vec AlgebraArith::generator(std::size_t i) const { return a_.coordinates(MPoly::variable(a_.ring(), i)); }

Vec AlgebraArith::add(const Vec& x, const Vec& y) const {
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = field().add(x[i], y[i]);
  return r;
}

Vec AlgebraArith::sub(const Vec& x, const Vec& y) const {
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = field().sub(x[i], y[i]);
  return r;
}

Vec AlgebraArith::scale(const Vec& x, const FieldElement& c) const {
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r[i] = field().mul(x[i], c);
  return r;
}

Vec AlgebraArith::mul(const Vec& x, const Vec& y) const {
  const Field& f = field();
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (f.is_zero(y[j])) continue;
      const FieldElement c = f.mul(x[i], y[j]);
      const Vec& e = table_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!f.is_zero(e[k])) r[k] = f.add(r[k], f.mul(c, e[k]));
      }
    }
  }
  return r;
}

Vec AlgebraArith::pow(Vec x, std::uint64_t e) const {
  Vec r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, x);
    e >>= 1U;
    if (e > 0) x = mul(x, x);
  }
  return r;
}

Matrix AlgebraArith::mult_matrix(const Vec& x) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec ej(dim_);
    ej[j] = field().one();
    m.set_column(j, mul(x, ej));
  }
  return m;
}

std::optional<Vec> AlgebraArith::inverse(const Vec& x) const {
  if (dim_ == 0) return Vec{};
  return solve(mult_matrix(x), one());
}

Matrix AlgebraArith::frobenius_matrix() const {
  const Field& f = field();
  const std::uint64_t p = f.characteristic();
  // x^q for each generator by m successive p-th powers.
  const std::size_t n = a_.ring()->nvars();
  std::vector<Vec> gq(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec g = generator(i);
    for (unsigned k = 0; k < f.degree(); ++k) g = pow(g, p);
    gq[i] = std::move(g);
  }
  Matrix m(f, dim_, dim_);
  const auto& bs = a_.basis();
  for (std::size_t b = 0; b < dim_; ++b) {
    Vec v = one();
    for (std::size_t i = 0; i < n; ++i) {
      if (bs[b][i] != 0) v = mul(v, pow(gq[i], bs[b][i]));
    }
    m.set_column(b, v);
  }
  return m;
}

Vec AlgebraArith::evaluate(const MPoly& f, std::span<const Vec> values) const {
  const std::size_t n = f.ring()->nvars();
  if (values.size() != n) throw Error(ErrorKind::MissingAssignment, "evaluation needs one value per variable");
  std::vector<std::vector<Vec>> powers(n);
  auto power = [&](std::size_t i, unsigned k) -> const Vec& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one());
    while (cache.size() <= k) cache.push_back(mul(cache.back(), values[i]));
    return cache[k];
  };
  Vec r = zero();
  for (const auto& t : f.terms()) {
    Vec term = constant(embed(f.field(), t.coeff, field()));
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] != 0) term = mul(term, power(i, t.mono[i]));
    }
    r = add(r, term);
  }
  return r;
}

Vec AlgebraArith::evaluate(const UniPoly& u, const Vec& x, const Vec& unit) const {
  Vec r = zero();
  for (int k = u.degree(); k >= 0; --k) {
    r = mul(r, x);
    r = add(r, scale(unit, embed(u.field(), u.coeff(static_cast<std::size_t>(k)), field())));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Homomorphisms, base extension

MPoly AlgebraHom::apply(const MPoly& f) const {
  return target.normal_form(substitute_expand(f, images, target.ring()));
}

bool AlgebraHom::is_well_defined() const {
  for (const auto& r : source.relations()) {
    if (!apply(r).is_zero()) return false;
  }
  return true;
}

AlgebraPresentation tensor_extend(const AlgebraPresentation& a, const Field& k) {
  if (k == a.field()) return a;
  RingPtr ring = make_ring(k, a.ring()->variables());
  std::vector<MPoly> rels;
  for (const auto& r : a.relations()) rels.push_back(map_into(r, ring));
  // A reduced Groebner basis stays reduced after extending scalars.
  std::vector<MPoly> gb;
  for (const auto& g : a.groebner().polys()) gb.push_back(map_into(g, ring));
  return AlgebraPresentation(ring, std::move(rels), GroebnerBasis(ring, std::move(gb)));
}

// ---------------------------------------------------------------------------
// Local decomposition

namespace {

std::size_t fixed_dimension(const AlgebraArith& ar) {
  Matrix m = ar.frobenius_matrix();
  for (std::size_t i = 0; i < ar.dimension(); ++i) m.at(i, i) = ar.field().sub(m.at(i, i), ar.field().one());
  return ar.dimension() - rank(std::move(m));
}

// Splits the idempotent e along the factorization of the minimal polynomial
// of b*e acting on eA.
std::vector<Vec> split_idempotent(const AlgebraArith& ar, const Vec& e, const Vec& b, std::uint64_t seed) {
  const Vec be = ar.mul(b, e);
  UniPoly mu = krylov_minimal_polynomial(ar.field(), e, [&](const Vec& v) { return ar.mul(be, v); });
  const auto facs = factor_univariate(mu, seed);
  if (facs.size() < 2) return {e};
  std::vector<UniPoly> parts;
  for (const auto& fc : facs) {
    UniPoly pw = UniPoly::constant(mu.field(), mu.field().one());
    for (unsigned k = 0; k < fc.multiplicity; ++k) pw = pw * fc.poly;
    parts.push_back(pw);
  }
  std::vector<Vec> out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    UniPoly others = UniPoly::constant(mu.field(), mu.field().one());
    for (std::size_t l = 0; l < parts.size(); ++l)
      if (l != j) others = others * parts[l];
    // u = others * (others^{-1} mod parts[j]) is 1 mod parts[j], 0 mod the rest.
    const ExtGcd eg = ext_gcd(others % parts[j], parts[j]);
    const UniPoly u = (others * eg.s) % mu;
    Vec ej = ar.evaluate(u, be, e);
    // Newton iteration for idempotents: e <- 3e^2 - 2e^3.
    for (;;) {
      const Vec sq = ar.mul(ej, ej);
      if (sq == ej) break;
      const Vec cu = ar.mul(sq, ej);
      ej = ar.sub(ar.scale(sq, ar.field().from_int(3)), ar.scale(cu, ar.field().from_int(2)));
    }
    out.push_back(std::move(ej));
  }
  return out;
}

bool vec_less(const Field& f, const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = f.compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::size_t count_local_factors(const AlgebraPresentation& a) {
  if (a.is_zero_ring()) return 0;
  return fixed_dimension(AlgebraArith(a));
}

std::vector<LocalFactor> decompose_local(const AlgebraPresentation& a, std::uint64_t seed) {
  if (a.is_zero_ring()) throw Error(ErrorKind::ZeroRing, "the zero ring has no local factors");
  const AlgebraArith ar(a);
  const std::size_t d = ar.dimension();
  const Field& f = ar.field();
  const std::size_t target = fixed_dimension(ar);

  std::vector<Vec> idems{ar.one()};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.order().value_or(UINT64_MAX) - 1);
  const std::size_t n = a.ring()->nvars();
  constexpr std::size_t kRandomTries = 200;
  for (std::size_t attempt = 0; idems.size() < target; ++attempt) {
    if (attempt >= n + kRandomTries) throw Error(ErrorKind::Internal, "local decomposition did not converge");
    Vec b;
    if (attempt < n) {
      b = ar.generator(attempt);
    } else {
      b = Vec(d);
      for (auto& c : b) c = f.element_at(pick(rng));
    }
    std::vector<Vec> next;
    for (const auto& e : idems) {
      auto parts = split_idempotent(ar, e, b, seed + attempt);
      next.insert(next.end(), parts.begin(), parts.end());
    }
    idems = std::move(next);
  }
  std::sort(idems.begin(), idems.end(), [&](const Vec& x, const Vec& y) { return vec_less(f, x, y); });

  // Frob^N kills the nilradical once q^N >= dim.
  Matrix frob = ar.frobenius_matrix();
  Matrix frob_n = frob;
  {
    const auto q = field_order(f);
    BigInt qn = q;
    while (qn < BigInt(d)) {
      frob_n = frob_n * frob;
      qn *= q;
    }
  }

  std::vector<LocalFactor> out;
  for (const auto& e : idems) {
    Matrix img(f, d, d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec eb(d);
      eb[b] = f.one();
      img.set_column(b, frob_n.apply(ar.mul(e, eb)));
    }
    const auto residue = static_cast<unsigned>(rank(std::move(img)));

    const MPoly epoly = a.from_coordinates(e);
    std::vector<MPoly> rels = a.relations();
    rels.push_back(MPoly::constant(a.ring(), f.one()) - epoly);
    AlgebraPresentation fac(a.ring(), std::move(rels));
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(fac.normal_form(MPoly::variable(fac.ring(), i)));
    const std::size_t dim = fac.dimension();
    out.push_back(LocalFactor{fac, epoly, residue, dim, AlgebraHom{a, fac, std::move(images)}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products

ProductPresentation product_algebra(const AlgebraPresentation& a1, const AlgebraPresentation& a2,
                                    const std::string& idempotent_var) {
  if (!(a1.field() == a2.field())) {
    throw Error(ErrorKind::MixedFields, "product factors are over " + a1.field().name() + " and " + a2.field().name());
  }
  const Field& f = a1.field();
  std::vector<std::string> vars = a1.ring()->variables();
  auto taken = [&](const std::string& s) { return std::find(vars.begin(), vars.end(), s) != vars.end(); };
  for (std::string v : a2.ring()->variables()) {
    while (taken(v)) v += "'";
    vars.push_back(v);
  }
  std::string e_name = idempotent_var;
  while (taken(e_name)) e_name += "'";
  vars.push_back(e_name);

  const std::size_t n1 = a1.ring()->nvars();
  const std::size_t n2 = a2.ring()->nvars();
  RingPtr ring = make_ring(f, vars);
  std::vector<std::size_t> map1(n1), map2(n2);
  for (std::size_t i = 0; i < n1; ++i) map1[i] = i;
  for (std::size_t i = 0; i < n2; ++i) map2[i] = n1 + i;

  const MPoly one = MPoly::constant(ring, f.one());
  const MPoly e = MPoly::variable(ring, n1 + n2);
  std::vector<MPoly> rels;
  rels.push_back(e * e - e);
  for (std::size_t i = 0; i < n1; ++i) {
    const MPoly t = MPoly::variable(ring, i);
    rels.push_back(t * (one - e));
    for (std::size_t j = 0; j < n2; ++j) rels.push_back(t * MPoly::variable(ring, n1 + j));
  }
  for (std::size_t j = 0; j < n2; ++j) rels.push_back(MPoly::variable(ring, n1 + j) * e);
  for (const auto& r : a1.relations()) rels.push_back(e * map_into(r, ring, map1));
  for (const auto& r : a2.relations()) rels.push_back((one - e) * map_into(r, ring, map2));
  AlgebraPresentation prod(ring, rels);

  std::vector<MPoly> im1, im2;
  for (std::size_t i = 0; i < n1; ++i) {
    im1.push_back(a1.normal_form(MPoly::variable(a1.ring(), i)));
    im2.push_back(MPoly(a2.ring()));
  }
  for (std::size_t j = 0; j < n2; ++j) {
    im1.push_back(MPoly(a1.ring()));
    im2.push_back(a2.normal_form(MPoly::variable(a2.ring(), j)));
  }
  im1.push_back(a1.normal_form(MPoly::constant(a1.ring(), f.one())));
  im2.push_back(MPoly(a2.ring()));
  return ProductPresentation{prod, e_name, AlgebraHom{prod, a1, std::move(im1)}, AlgebraHom{prod, a2, std::move(im2)}};
}

}  // namespace resweil
