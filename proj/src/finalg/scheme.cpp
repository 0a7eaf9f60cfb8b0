#include "resweil/scheme.hpp"

#include <set>

#include "resweil/error.hpp"

namespace resweil {

namespace {

std::vector<MPoly> lifted_base_gb(const AlgebraPresentation& base, const RingPtr& ring) {
  std::vector<std::size_t> idx(base.ring()->nvars());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<MPoly> out;
  for (const auto& g : base.groebner().polys()) out.push_back(map_into(g, ring, idx));
  return out;
}

}  // namespace

SchemePresentation::SchemePresentation(AlgebraPresentation base, std::vector<std::string> scheme_vars,
                                       std::vector<MPoly> relations)
    : base_(std::move(base)), scheme_vars_(std::move(scheme_vars)) {
  std::vector<std::string> all = base_.ring()->variables();
  std::set<std::string> seen(all.begin(), all.end());
  for (const auto& v : scheme_vars_) {
    if (!seen.insert(v).second) throw Error(ErrorKind::SyntaxError, "variable " + v + " declared twice");
    all.push_back(v);
  }
  ring_ = make_ring(base_.field(), std::move(all));
  const auto gb = lifted_base_gb(base_, ring_);
  for (const auto& r : relations) {
    require_same_ring(*r.ring(), *ring_, "scheme relation");
    relations_.push_back(reduce(r, gb));
  }
}

SchemePresentation SchemePresentation::from_named(AlgebraPresentation base, std::vector<std::string> scheme_vars,
                                                  const std::vector<MPoly>& relations) {
  std::vector<std::string> all = base.ring()->variables();
  all.insert(all.end(), scheme_vars.begin(), scheme_vars.end());
  RingPtr ring = make_ring(base.field(), all);
  std::vector<MPoly> rels;
  for (const auto& r : relations) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r.ring()->nvars(); ++i) {
      const auto& name = r.ring()->variables()[i];
      auto j = ring->index_of(name);
      if (!j) {
        if (r.uses_variable(i)) throw Error(ErrorKind::UndeclaredVariable, "undeclared variable " + name);
        idx.push_back(0);
        continue;
      }
      idx.push_back(*j);
    }
    rels.push_back(map_into(r, ring, idx));
  }
  return SchemePresentation(std::move(base), std::move(scheme_vars), std::move(rels));
}

AlgebraPresentation SchemePresentation::coordinate_ring() const {
  std::vector<MPoly> rels = lifted_base_gb(base_, ring_);
  rels.insert(rels.end(), relations_.begin(), relations_.end());
  return AlgebraPresentation(ring_, std::move(rels));
}

SchemePresentation SchemePresentation::base_change(const AlgebraPresentation& new_base,
                                                   const std::vector<MPoly>& base_images) const {
  std::vector<std::string> all = new_base.ring()->variables();
  all.insert(all.end(), scheme_vars_.begin(), scheme_vars_.end());
  RingPtr ring = make_ring(new_base.field(), all);
  const std::size_t nb = new_base.ring()->nvars();
  std::vector<std::size_t> idx(nb);
  for (std::size_t i = 0; i < nb; ++i) idx[i] = i;
  std::vector<MPoly> images;
  for (const auto& b : base_images) images.push_back(map_into(b, ring, idx));
  for (std::size_t j = 0; j < scheme_vars_.size(); ++j) images.push_back(MPoly::variable(ring, nb + j));
  std::vector<MPoly> rels;
  for (const auto& r : relations_) rels.push_back(substitute_expand(r, images, ring));
  return SchemePresentation(new_base, scheme_vars_, std::move(rels));
}

SchemePresentation SchemePresentation::extend_scalars(const Field& k) const {
  const AlgebraPresentation nb = tensor_extend(base_, k);
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < nb.ring()->nvars(); ++i) images.push_back(MPoly::variable(nb.ring(), i));
  return base_change(nb, images);
}

MPoly determinant(const std::vector<std::vector<MPoly>>& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly::constant(ring, ring->field().one());
  if (n == 1) return m[0][0];
  MPoly det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][c] * determinant(minor, ring);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

EtaleCertificate etale_check(const SchemePresentation& x) {
  const std::size_t q = x.num_scheme_vars();
  const std::size_t r = x.relations().size();
  if (q != r) {
    throw Error(ErrorKind::NotSquareSystem,
                std::to_string(r) + " relations in " + std::to_string(q) + " variables is not a square system");
  }
  if (x.base().is_zero_ring()) throw Error(ErrorKind::EmptyBase, "base algebra is the zero ring");
  const AlgebraPresentation b = x.coordinate_ring();
  if (!b.is_finite()) throw Error(ErrorKind::NotFinite, "coordinate ring is not finite over the base field");

  std::vector<std::vector<MPoly>> jac(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < q; ++j) jac[i].push_back(partial_derivative(x.relations()[i], x.scheme_index(j)));

  EtaleCertificate cert{false, b.normal_form(determinant(jac, x.ring())), std::nullopt, {}};
  if (b.is_zero_ring()) {
    // Empty scheme: vacuously etale, every element is a unit in the zero ring.
    cert.etale = true;
    cert.inverse = MPoly(b.ring());
    return cert;
  }
  const AlgebraArith ar(b);
  auto inv = ar.inverse(ar.from_poly(cert.jacobian_det));
  if (inv) {
    cert.etale = true;
    cert.inverse = b.from_coordinates(*inv);
  } else {
    cert.obstruction = "Jacobian determinant " + cert.jacobian_det.to_string() + " is not a unit in B";
  }
  return cert;
}

}  // namespace resweil
