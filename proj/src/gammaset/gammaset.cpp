#include "resweil/gammaset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "resweil/error.hpp"

namespace resweil {

namespace {

struct PointLess {
  const Field* f;
  bool operator()(const Point& a, const Point& b) const {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      const int c = f->compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

std::string point_label(const Field& f, const Point& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ", ";
    out += f.to_string(x[i]);
  }
  return out + ")";
}

Point frobenius_point(const Field& f, const Point& x, unsigned e) {
  Point out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(f.frobenius(c, e));
  return out;
}

void require_stage(unsigned stage, unsigned base_degree) {
  if (stage == 0 || stage % base_degree != 0)
    throw Error(ErrorKind::IncompatibleDegrees, "stage " + std::to_string(stage) + " is not a multiple of " +
                                                    std::to_string(base_degree));
}

}  // namespace

std::vector<std::vector<std::size_t>> GammaSet::cycles() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = frob[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> GammaSet::cycle_type() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

bool GammaSet::is_valid() const {
  if (frob.size() != points.size() || ambient.degree() % frob_exponent != 0) return false;
  std::vector<bool> hit(size(), false);
  for (std::size_t i : frob) {
    if (i >= size() || hit[i]) return false;
    hit[i] = true;
  }
  const unsigned order = ambient.degree() / frob_exponent;
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t j = i;
    for (unsigned k = 0; k < order; ++k) j = frob[j];
    if (j != i) return false;
  }
  return true;
}

std::optional<std::size_t> GammaSet::find(const Point& x) const {
  const PointLess less{&ambient};
  const auto it = std::lower_bound(points.begin(), points.end(), x, less);
  if (it == points.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

GammaSet make_gamma_set(const Field& ambient, unsigned frob_exponent, std::vector<Point> points) {
  GammaSet g{ambient, frob_exponent, std::move(points), {}, {}};
  std::sort(g.points.begin(), g.points.end(), PointLess{&ambient});
  g.points.erase(std::unique(g.points.begin(), g.points.end()), g.points.end());
  for (const auto& x : g.points) {
    const auto j = g.find(frobenius_point(ambient, x, frob_exponent));
    if (!j) throw Error(ErrorKind::Internal, "point set is not closed under Frobenius");
    g.frob.push_back(*j);
    g.labels.push_back(point_label(ambient, x));
  }
  return g;
}

bool commutes(const EquivariantMap& f, const GammaSet& source, const GammaSet& target) {
  if (f.images.size() != source.size()) return false;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (f.images[i] >= target.size()) return false;
    if (f.images[source.frob[i]] != target.frob[f.images[i]]) return false;
  }
  return true;
}

unsigned splitting_stage(const AlgebraPresentation& a) {
  if (a.is_zero_ring()) return 1;
  unsigned m = 1;
  for (const auto& f : decompose_local(a)) m = static_cast<unsigned>(lcm_u64(m, f.residue_degree));
  return m;
}

GammaSet geometric_points(const AlgebraPresentation& a, std::optional<unsigned> stage) {
  if (a.is_zero_ring()) throw Error(ErrorKind::EmptyBase, "the base algebra is the zero ring");
  const unsigned deg = a.field().degree();
  const unsigned l = stage ? *stage : deg * splitting_stage(a);
  require_stage(l, deg);
  const Field k = Field::extension(a.field().characteristic(), l);
  return make_gamma_set(k, deg, enumerate_points(a.groebner().polys(), a.ring(), k));
}

AlgebraPresentation fiber(const SchemePresentation& x, const Point& s, const Field& k) {
  if (s.size() != x.num_base_vars()) throw Error(ErrorKind::MissingAssignment, "geometric point has wrong arity");
  const RingPtr combined = make_ring(k, x.ring()->variables());
  const RingPtr target = make_ring(k, x.scheme_vars());
  std::vector<MPoly> images;
  for (const auto& c : s) images.push_back(MPoly::constant(target, c));
  for (std::size_t j = 0; j < x.num_scheme_vars(); ++j) images.push_back(MPoly::variable(target, j));
  std::vector<MPoly> rels;
  for (const auto& g : x.relations()) rels.push_back(substitute_expand(map_into(g, combined), images, target));
  AlgebraPresentation out(target, std::move(rels));
  if (!out.is_finite()) throw Error(ErrorKind::PositiveDimensionalFiber, "fiber over " + point_label(k, s) + " is not finite");
  return out;
}

GammaSet pi0_points(const AlgebraPresentation& c, std::optional<unsigned> stage) {
  if (!c.is_finite()) throw Error(ErrorKind::NotZeroDimensional, "algebra is not zero-dimensional");
  const unsigned deg = c.field().degree();
  const unsigned l = stage ? *stage : deg * splitting_stage(c);
  require_stage(l, deg);
  const Field k = Field::extension(c.field().characteristic(), l);
  return make_gamma_set(k, deg, enumerate_points(c.groebner().polys(), c.ring(), k));
}

GammaSet pi0_points_absolute(const AlgebraPresentation& c, unsigned stage) {
  GammaSet g = pi0_points(c, stage);
  return make_gamma_set(g.ambient, 1, std::move(g.points));
}

GammaSet product_gamma_set(const GammaSet& s, const std::vector<GammaSet>& fibers) {
  if (fibers.size() != s.size())
    throw Error(ErrorKind::MissingFiber, std::to_string(s.size()) + " base points but " +
                                             std::to_string(fibers.size()) + " fibers");
  for (const auto& f : fibers)
    if (!(f.ambient == s.ambient)) throw Error(ErrorKind::AmbientMismatch, "fiber realized over " + f.ambient.name());
  const Field& k = s.ambient;
  const unsigned e = s.frob_exponent;
  const std::size_t n = s.size();

  std::uint64_t total = 1;
  for (const auto& f : fibers) {
    if (f.size() != 0 && total > kMaxProductSize / f.size())
      throw Error(ErrorKind::SearchGuardExceeded, "twisted product exceeds 10^6 elements");
    total *= f.size();
  }
  // stride[i]: weight of component i; component 0 is most significant.
  std::vector<std::uint64_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * fibers[i].size();

  // fmap[i][u] = index of F(u) in the fiber over F(s_i).
  std::vector<std::vector<std::size_t>> fmap(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GammaSet& dst = fibers[s.frob[i]];
    for (const auto& x : fibers[i].points) {
      const auto j = dst.find(frobenius_point(k, x, e));
      if (!j) throw Error(ErrorKind::Internal, "Frobenius does not carry fiber " + s.labels[i] + " onto its image");
      fmap[i].push_back(*j);
    }
  }

  GammaSet out{k, e, {}, {}, {}};
  out.points.reserve(total);
  out.frob.reserve(total);
  std::vector<std::size_t> u(n), v(n);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    Point coords;
    std::string label = "[";
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = rest / stride[i];
      rest %= stride[i];
      const Point& x = fibers[i].points[u[i]];
      coords.insert(coords.end(), x.begin(), x.end());
      if (i > 0) label += " ";
      label += fibers[i].labels[u[i]];
    }
    for (std::size_t i = 0; i < n; ++i) v[s.frob[i]] = fmap[i][u[i]];
    std::uint64_t image = 0;
    for (std::size_t i = 0; i < n; ++i) image += v[i] * stride[i];
    out.points.push_back(std::move(coords));
    out.frob.push_back(image);
    out.labels.push_back(label + "]");
  }
  return out;
}

bool evaluation_equivariant(const GammaSet& product, const GammaSet& s, const std::vector<GammaSet>& fibers) {
  const std::size_t n = s.size();
  if (fibers.size() != n) return false;
  std::vector<std::uint64_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * fibers[i].size();
  auto component = [&](std::uint64_t t, std::size_t i) { return (t / stride[i]) % fibers[i].size(); };
  for (std::size_t t = 0; t < product.size(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      const Point lhs = frobenius_point(s.ambient, fibers[i].points[component(t, i)], s.frob_exponent);
      const std::size_t si = s.frob[i];
      if (fibers[si].points[component(product.frob[t], si)] != lhs) return false;
    }
  }
  return true;
}

ReductionMap reduction_map(const SchemePresentation& x, unsigned m) {
  const AlgebraPresentation& a = x.base();
  if (a.is_zero_ring()) throw Error(ErrorKind::EmptyBase, "the base algebra is the zero ring");
  const auto factors = decompose_local(a);
  if (factors.size() != 1 || factors[0].residue_degree != 1)
    throw Error(ErrorKind::NotLocalBase, "reduction map needs a local base with residue field equal to its base field");
  const Field& k = a.field();
  const unsigned deg = k.degree();
  const Field big = Field::extension(k.characteristic(), deg * m);

  const GammaSet s = geometric_points(a, deg);
  const Point& s0 = s.points.at(0);
  const RestrictedScheme r = weil_restrict(x);
  GammaSet source = make_gamma_set(big, deg, enumerate_points(r, big));
  GammaSet target = pi0_points(fiber(x, s0, k), deg * m);

  // s(e_b) for the standard basis of A, embedded into the big field.
  std::vector<FieldElement> residue;
  for (std::size_t b = 0; b < a.dimension(); ++b)
    residue.push_back(embed(k, evaluate(a.basis_element(b), s0, k), big));

  EquivariantMap map;
  std::vector<bool> hit(target.size(), false);
  std::size_t hits = 0;
  for (const auto& pt : source.points) {
    const AlgebraPoint u = regroup(r, pt, big);
    Point y;
    for (const auto& uj : u) {
      FieldElement c = big.zero();
      for (std::size_t b = 0; b < uj.size(); ++b) c = big.add(c, big.mul(uj[b], residue[b]));
      y.push_back(c);
    }
    const auto j = target.find(y);
    if (!j) throw Error(ErrorKind::Internal, "reduction of a restricted point is not a fiber point");
    map.images.push_back(*j);
    if (!hit[*j]) {
      hit[*j] = true;
      ++hits;
    }
  }
  map.bijective = source.size() == target.size() && hits == target.size();
  return {std::move(source), std::move(target), std::move(map)};
}

std::optional<EquivariantMap> gamma_iso(const GammaSet& a, const GammaSet& b) {
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> by_len;
  for (auto& c : b.cycles()) by_len[c.size()].push_back(std::move(c));
  std::map<std::size_t, std::size_t> used;
  EquivariantMap out;
  out.images.assign(a.size(), 0);
  for (const auto& c : a.cycles()) {
    const auto& match = by_len[c.size()][used[c.size()]++];
    for (std::size_t i = 0; i < c.size(); ++i) out.images[c[i]] = match[i];
  }
  out.bijective = true;
  return out;
}

}  // namespace resweil
