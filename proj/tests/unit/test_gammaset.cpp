#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracle/oracle.hpp"
#include "resweil/dsl.hpp"
#include "resweil/error.hpp"
#include "resweil/gammaset.hpp"

using namespace resweil;

namespace {

AlgebraPresentation alg(std::uint64_t p, std::vector<std::string> vars, const std::vector<std::string>& rels) {
  const RingPtr r = make_ring(Field::prime(p), std::move(vars));
  std::vector<MPoly> ps;
  for (const auto& s : rels) ps.push_back(parse_poly(s, r));
  return AlgebraPresentation(r, ps);
}

SchemePresentation scheme(const AlgebraPresentation& a, std::vector<std::string> vars, const std::vector<std::string>& rels) {
  std::vector<std::string> all = a.ring()->variables();
  all.insert(all.end(), vars.begin(), vars.end());
  const RingPtr r = make_ring(a.field(), all);
  std::vector<MPoly> ps;
  for (const auto& s : rels) ps.push_back(parse_poly(s, r));
  return SchemePresentation(a, std::move(vars), ps);
}

std::vector<GammaSet> fibers_at(const SchemePresentation& x, const GammaSet& s) {
  std::vector<GammaSet> out;
  for (const auto& pt : s.points) out.push_back(pi0_points(fiber(x, pt, s.ambient), s.ambient.degree()));
  return out;
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

GammaSet synthetic(const std::vector<std::size_t>& perm) {
  GammaSet g{Field::prime(3), 1, {}, perm, {}};
  g.points.resize(perm.size());
  return g;
}

}  // namespace

TEST(GeometricPoints, QuadraticExtension) {
  const auto a = alg(5, {"t"}, {"t^2 - 2"});
  const auto s = geometric_points(a);
  const Field f25 = make_ext_field(5, 2);
  EXPECT_EQ(s.ambient, f25);
  EXPECT_EQ(s.points, oracle::brute_points(a.groebner().polys(), 1, f25));
  EXPECT_EQ(s.frob, oracle::frobenius_perm(s.points, f25, 1));
  EXPECT_EQ(s.cycle_type(), (std::vector<std::size_t>{2}));
  EXPECT_TRUE(s.is_valid());
}

TEST(GeometricPoints, DualNumbersAndSplit) {
  const auto d = geometric_points(alg(5, {"eps"}, {"eps^2"}));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d.points[0], (Point{Field::prime(5).zero()}));
  EXPECT_EQ(d.frob, (std::vector<std::size_t>{0}));

  const auto k = alg(5, {"a"}, {"a"});
  const auto split = geometric_points(product_algebra(k, k).algebra);
  EXPECT_EQ(split.size(), 2U);
  EXPECT_EQ(split.cycle_type(), (std::vector<std::size_t>{1, 1}));

  const auto triv = geometric_points(alg(7, {}, {}));
  ASSERT_EQ(triv.size(), 1U);
  EXPECT_TRUE(triv.points[0].empty());
  expect_error(ErrorKind::EmptyBase, [] { geometric_points(alg(5, {"t"}, {"1"})); });
}

TEST(GeometricPoints, OrbitsAreLocalFactors) {
  const std::vector<AlgebraPresentation> cases{
      alg(3, {"t"}, {"t^3 - t"}),
      alg(5, {"t"}, {"t^2*(t - 1)"}),
      alg(3, {"t", "eps"}, {"t^2 + 1", "eps^2"}),
      alg(3, {"t"}, {"(t^2 + 1)*(t^3 - t - 1)*t^2"}),
      alg(7, {"t", "u"}, {"t^2 - 3", "u^2 - 3"}),
  };
  for (const auto& a : cases) {
    const auto s = geometric_points(a);
    const auto fs = decompose_local(a);
    std::size_t degs = 0;
    for (const auto& f : fs) degs += f.residue_degree;
    EXPECT_EQ(s.size(), degs);
    EXPECT_EQ(s.cycles().size(), fs.size());
    EXPECT_EQ(s.frob, oracle::frobenius_perm(s.points, s.ambient, 1));
    EXPECT_EQ(s.points, oracle::brute_points(a.groebner().polys(), a.ring()->nvars(), s.ambient));
    // Enlarging the stage keeps the set.
    EXPECT_EQ(geometric_points(a, 2 * s.ambient.degree()).size(), s.size());
  }
}

TEST(Fiber, Examples) {
  const auto x = scheme(alg(7, {"eps"}, {"eps^2"}), {"y"}, {"y^2 - y - eps"});
  const Field f7 = Field::prime(7);
  const auto c = fiber(x, {f7.zero()}, f7);
  EXPECT_EQ(c.groebner().polys()[0].to_string(), "y^2 - y");
  const auto pts = pi0_points(c);
  EXPECT_EQ(pts.points, (std::vector<Point>{{f7.zero()}, {f7.one()}}));
  EXPECT_EQ(pts.cycle_type(), (std::vector<std::size_t>{1, 1}));

  const auto a = alg(5, {"t"}, {"t^2 - 2"});
  const auto x2 = scheme(a, {"y"}, {"y^2 - t"});
  const auto s = geometric_points(a);
  for (const auto& pt : s.points) {
    const auto fc = fiber(x2, pt, s.ambient);
    EXPECT_EQ(fc.dimension(), 2U);  // B is A-free of rank 2
    EXPECT_EQ(fc.field(), s.ambient);
    // y^2 = sqrt(2) has no root in F_25 (sqrt(2) is not a square there).
    EXPECT_EQ(pi0_points(fc).ambient.degree(), 4U);
  }
  const auto bad = scheme(alg(5, {"t"}, {"t"}), {"y", "z"}, {"y*z"});
  expect_error(ErrorKind::PositiveDimensionalFiber, [&] { fiber(bad, {Field::prime(5).zero()}, Field::prime(5)); });
}

TEST(Pi0Points, Examples) {
  const auto c = alg(5, {"y"}, {"y^2 - 2"});
  const auto g = pi0_points(c);
  EXPECT_EQ(g.ambient.degree(), 2U);
  EXPECT_EQ(g.cycle_type(), (std::vector<std::size_t>{2}));

  const auto r = alg(5, {"y0", "y1"}, {"y0^2 + 2*y1^2", "2*y0*y1 - 1"});
  const auto res = pi0_points(r);
  const Field f625 = make_ext_field(5, 4);
  ASSERT_EQ(res.ambient, f625);
  EXPECT_EQ(res.points, oracle::brute_points(r.groebner().polys(), 2, f625));
  EXPECT_EQ(res.frob, oracle::frobenius_perm(res.points, f625, 1));
  EXPECT_EQ(pi0_points(r, 8).size(), res.size());
  expect_error(ErrorKind::NotZeroDimensional, [] { pi0_points(alg(5, {"x", "y"}, {"x*y"})); });
  EXPECT_EQ(pi0_points(alg(5, {"y"}, {"1"})).size(), 0U);
}

TEST(Pi0Points, RelativeFrobeniusOverExtension) {
  // Over K = F_25, C = K[y]/(y^2 - z) with z the generator: the action is x -> x^25.
  const Field k = make_ext_field(5, 2);
  const RingPtr ring = make_ring(k, {"y"});
  const MPoly g = MPoly::variable(ring, 0).pow(2) - MPoly::constant(ring, k.generator());
  const auto c = AlgebraPresentation(ring, {g});
  const auto pts = pi0_points(c);
  EXPECT_EQ(pts.frob_exponent, 2U);
  EXPECT_EQ(pts.frob, oracle::frobenius_perm(pts.points, pts.ambient, 2));
  EXPECT_TRUE(pts.is_valid());
}

TEST(Product, SinglePointIsFiber) {
  const auto x = scheme(alg(7, {"eps"}, {"eps^2"}), {"y"}, {"y^2 - y - eps"});
  const auto s = geometric_points(x.base());
  const auto fibers = fibers_at(x, s);
  const auto prod = product_gamma_set(s, fibers);
  EXPECT_EQ(prod.points, fibers[0].points);
  EXPECT_EQ(prod.frob, fibers[0].frob);
  EXPECT_TRUE(evaluation_equivariant(prod, s, fibers));
}

TEST(Product, SplitBase) {
  const auto k = alg(5, {"a"}, {"a"});
  const auto base = product_algebra(k, k).algebra;
  const auto x = SchemePresentation::from_named(base, {"y"}, {parse_poly("y^2 - 2", make_ring(Field::prime(5), {"y"}))});
  const auto s = geometric_points(base, 2);
  const auto fibers = fibers_at(x, s);
  const auto prod = product_gamma_set(s, fibers);
  EXPECT_EQ(prod.size(), 4U);
  EXPECT_EQ(prod.cycle_type(), (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(evaluation_equivariant(prod, s, fibers));
  EXPECT_TRUE(prod.is_valid());
}

TEST(Product, QuadraticMatchesRestriction) {
  const auto a = alg(5, {"t"}, {"t^2 - 2"});
  const auto x = scheme(a, {"y"}, {"y^2 - t"});
  const auto s = geometric_points(a, 4);
  const auto fibers = fibers_at(x, s);
  const auto prod = product_gamma_set(s, fibers);
  EXPECT_TRUE(evaluation_equivariant(prod, s, fibers));
  ASSERT_EQ(prod.size(), 4U);
  // Oracle: brute-force points of the restriction over F_625 and their Frobenius.
  const auto r = weil_restrict(x);
  const Field f625 = make_ext_field(5, 4);
  const auto brute = oracle::brute_points(r.relations(), r.ring->nvars(), f625);
  EXPECT_EQ(prod.cycle_type(), oracle::cycle_type(oracle::frobenius_perm(brute, f625, 1)));
  const auto iso = gamma_iso(pi0_points_absolute(r.algebra(), 4), prod);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(iso->bijective);
}

TEST(Product, Errors) {
  const auto s = geometric_points(alg(5, {"t"}, {"t^2 - t"}));
  expect_error(ErrorKind::MissingFiber, [&] { product_gamma_set(s, {}); });
  const auto other = pi0_points(alg(5, {"y"}, {"y^2 - 2"}));
  expect_error(ErrorKind::AmbientMismatch, [&] { product_gamma_set(s, {other, other}); });
}

TEST(GammaIso, Examples) {
  const auto g = synthetic({1, 0, 3, 2});
  const auto id = gamma_iso(g, g);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->images, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_FALSE(gamma_iso(g, synthetic({1, 2, 3, 0})));
  EXPECT_FALSE(gamma_iso(g, synthetic({1, 0, 2})));
}

TEST(GammaIso, ConjugatePermutations) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<std::size_t> perm(n), conj(n), inv(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::iota(conj.begin(), conj.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(conj.begin(), conj.end(), rng);
    for (std::size_t i = 0; i < n; ++i) inv[conj[i]] = i;
    // other = conj ∘ perm ∘ conj^{-1}
    std::vector<std::size_t> other(n);
    for (std::size_t i = 0; i < n; ++i) other[i] = conj[perm[inv[i]]];
    const auto a = synthetic(perm), b = synthetic(other);
    const auto iso = gamma_iso(a, b);
    ASSERT_TRUE(iso);
    EXPECT_TRUE(commutes(*iso, a, b));
    std::vector<std::size_t> sorted = iso->images;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
  }
}

TEST(Reduction, DualNumbers) {
  const auto x = scheme(alg(7, {"eps"}, {"eps^2"}), {"y"}, {"y^2 - y - eps"});
  const auto rm = reduction_map(x, 1);
  const Field f7 = Field::prime(7);
  ASSERT_EQ(rm.source.points, (std::vector<Point>{{f7.zero(), f7.from_int(6)}, {f7.one(), f7.one()}}));
  ASSERT_EQ(rm.target.points, (std::vector<Point>{{f7.zero()}, {f7.one()}}));
  EXPECT_EQ(rm.map.images, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(rm.map.bijective);
  EXPECT_TRUE(commutes(rm.map, rm.source, rm.target));
  for (unsigned m = 2; m <= 3; ++m) EXPECT_TRUE(reduction_map(x, m).map.bijective);
}

TEST(Reduction, TrivialAndNonSmooth) {
  const auto triv = reduction_map(scheme(alg(7, {}, {}), {"y"}, {"y^3 - 2"}), 3);
  EXPECT_EQ(triv.source.points, triv.target.points);
  EXPECT_EQ(triv.map.images, (std::vector<std::size_t>{0, 1, 2}));

  const auto bad = reduction_map(scheme(alg(5, {"eps"}, {"eps^2"}), {}, {"eps"}), 1);
  EXPECT_EQ(bad.source.size(), 0U);
  EXPECT_EQ(bad.target.size(), 1U);
  EXPECT_FALSE(bad.map.bijective);

  expect_error(ErrorKind::NotLocalBase, [] { reduction_map(scheme(alg(5, {"t"}, {"t^2 - 2"}), {"y"}, {"y^2 - t"}), 1); });
  expect_error(ErrorKind::NotLocalBase, [] { reduction_map(scheme(alg(5, {"t"}, {"t^2 - t"}), {"y"}, {"y^2 - t"}), 1); });
}
