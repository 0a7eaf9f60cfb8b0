#include <gtest/gtest.h>

#include <random>

#include "resweil/algebra.hpp"
#include "resweil/dsl.hpp"
#include "resweil/error.hpp"
#include "resweil/scheme.hpp"
#include "resweil/weilres.hpp"

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

void check_decomposition(const AlgebraPresentation& a) {
  const auto fs = decompose_local(a);
  const AlgebraArith ar(a);
  Vec sum = ar.zero();
  std::size_t dims = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Vec ei = ar.from_poly(fs[i].idempotent);
    EXPECT_EQ(ar.mul(ei, ei), ei);
    for (std::size_t j = i + 1; j < fs.size(); ++j) EXPECT_TRUE(ar.is_zero(ar.mul(ei, ar.from_poly(fs[j].idempotent))));
    sum = ar.add(sum, ei);
    dims += fs[i].dimension;
    EXPECT_TRUE(fs[i].projection.is_well_defined());
    // Each factor is local.
    EXPECT_EQ(count_local_factors(fs[i].algebra), 1U);
  }
  EXPECT_EQ(sum, ar.one());
  EXPECT_EQ(dims, a.dimension());
  EXPECT_EQ(fs.size(), count_local_factors(a));
}

}  // namespace

TEST(Algebra, DimensionAndBasis) {
  const auto a = alg(5, {"t"}, {"t^2 - 2"});
  const auto db = dimension_and_basis(a);
  EXPECT_EQ(db.dimension, 2U);
  EXPECT_TRUE(db.basis[0].is_one());
  EXPECT_EQ(alg(5, {"t"}, {"1"}).dimension(), 0U);
  try {
    alg(5, {"x", "y"}, {"x*y"}).dimension();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFinite);
  }
  // Prime field with no generators.
  EXPECT_EQ(alg(5, {}, {}).dimension(), 1U);
}

TEST(Algebra, DimensionMatchesMultiplicationRank) {
  const auto a = alg(3, {"t", "u"}, {"t^2 + 1", "u^3 - u - t"});
  const AlgebraArith ar(a);
  EXPECT_EQ(a.dimension(), 6U);
  EXPECT_EQ(rank(ar.mult_matrix(ar.one())), 6U);
}

TEST(Algebra, TensorExtend) {
  const auto a = alg(5, {"t"}, {"t^2 - 2"});
  EXPECT_EQ(tensor_extend(a, Field::prime(5)).ring(), a.ring());
  const auto ak = tensor_extend(a, make_ext_field(5, 2));
  EXPECT_EQ(ak.dimension(), 2U);
  EXPECT_EQ(decompose_local(ak).size(), 2U);
  for (std::uint64_t p : {3ULL, 7ULL}) {
    const auto b = alg(p, {"t", "e"}, {"t^3 - t - 1", "e^2"});
    for (unsigned m = 1; m <= 3; ++m) EXPECT_EQ(tensor_extend(b, make_ext_field(p, m)).dimension(), b.dimension());
  }
}

TEST(Algebra, DecomposeSplitIdempotents) {
  const auto a = alg(5, {"t"}, {"t^2 - t"});
  const auto fs = decompose_local(a);
  ASSERT_EQ(fs.size(), 2U);
  EXPECT_EQ(fs[0].dimension, 1U);
  EXPECT_EQ(fs[1].dimension, 1U);
  check_decomposition(a);
}

TEST(Algebra, DecomposeDualNumbersAndField) {
  const auto d = decompose_local(alg(5, {"eps"}, {"eps^2"}));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].dimension, 2U);
  EXPECT_EQ(d[0].residue_degree, 1U);
  const auto f = decompose_local(alg(5, {"t"}, {"t^2 - 2"}));
  ASSERT_EQ(f.size(), 1U);
  EXPECT_EQ(f[0].residue_degree, 2U);
  try {
    decompose_local(alg(5, {"t"}, {"1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroRing);
  }
}

TEST(Algebra, DecomposeMixed) {
  check_decomposition(alg(5, {"t"}, {"t^2*(t - 1)"}));
  check_decomposition(alg(3, {"t"}, {"t^3 - t"}));
  check_decomposition(alg(3, {"t", "e"}, {"t^2 + 1", "e^2"}));
  check_decomposition(alg(5, {"t", "u"}, {"t^2 - 2", "u^2 - 2"}));
  check_decomposition(alg(7, {"t"}, {"(t^2 + 1)^2*(t - 3)*t^3"}));
  const auto fs = decompose_local(alg(5, {"t"}, {"t^2*(t - 1)"}));
  ASSERT_EQ(fs.size(), 2U);
  EXPECT_EQ(fs[0].dimension + fs[1].dimension, 3U);
  // Seed independence of the canonical order.
  const auto a = alg(5, {"t", "u"}, {"t^2 - 2", "u^2 - 2"});
  const auto x = decompose_local(a, 1), y = decompose_local(a, 12345);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(x[i].idempotent, y[i].idempotent);
}

TEST(Algebra, ResidueDegreesCountGeometricPoints) {
  // sum of residue degrees = |Hom(A, F_{p^M})| at a stage containing all residue fields
  const auto a = alg(3, {"t"}, {"(t^2 + 1)*(t^3 - t - 1)*t^2"});
  unsigned total = 0;
  for (const auto& f : decompose_local(a)) total += f.residue_degree;
  const auto homs = enumerate_points(a.groebner().polys(), a.ring(), make_ext_field(3, 6));
  EXPECT_EQ(total, homs.size());
}

TEST(Algebra, ProductAlgebra) {
  const auto k = alg(5, {"a"}, {"a"});
  const auto prod = product_algebra(k, k);
  EXPECT_EQ(prod.algebra.dimension(), 2U);
  EXPECT_EQ(decompose_local(prod.algebra).size(), decompose_local(alg(5, {"t"}, {"t^2 - t"})).size());
  EXPECT_TRUE(prod.to_first.is_well_defined());
  EXPECT_TRUE(prod.to_second.is_well_defined());

  const auto a1 = alg(5, {"t"}, {"t^2 - 2"});
  const auto a2 = alg(5, {"u"}, {"u^3"});
  EXPECT_EQ(product_algebra(a1, a2).algebra.dimension(), 5U);
  // A x 0 = A
  EXPECT_EQ(product_algebra(a1, alg(5, {"u"}, {"1"})).algebra.dimension(), 2U);
  try {
    product_algebra(a1, alg(7, {"u"}, {"u"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedFields);
  }
}

TEST(Algebra, TensorCommutesWithProduct) {
  const auto a1 = alg(3, {"t"}, {"t^2 + 1"});
  const auto a2 = alg(3, {"u"}, {"u^2"});
  const Field k = make_ext_field(3, 2);
  const auto lhs = tensor_extend(product_algebra(a1, a2).algebra, k);
  const auto rhs = product_algebra(tensor_extend(a1, k), tensor_extend(a2, k)).algebra;
  EXPECT_EQ(lhs.dimension(), rhs.dimension());
  const auto fl = decompose_local(lhs), fr = decompose_local(rhs);
  ASSERT_EQ(fl.size(), fr.size());
  for (std::size_t i = 0; i < fl.size(); ++i) EXPECT_EQ(fl[i].dimension, fr[i].dimension);
}

TEST(Etale, DualNumbersCertificate) {
  const auto a = alg(7, {"eps"}, {"eps^2"});
  const auto x = scheme(a, {"y"}, {"y^2 - y - eps"});
  const auto cert = etale_check(x);
  ASSERT_TRUE(cert.etale);
  const auto b = x.coordinate_ring();
  EXPECT_EQ(cert.jacobian_det, b.normal_form(parse_poly("2*y - 1", x.ring())));
  EXPECT_TRUE(b.normal_form(cert.jacobian_det * *cert.inverse - MPoly::constant(x.ring(), 1)).is_zero());
  // (2y - 1)^2 = 1 + 4 eps
  EXPECT_EQ(b.normal_form(cert.jacobian_det * cert.jacobian_det), b.normal_form(parse_poly("1 + 4*eps", x.ring())));
}

TEST(Etale, QuadraticExtension) {
  const auto a = alg(5, {"t"}, {"t^2 - 2"});
  const auto x = scheme(a, {"y"}, {"y^2 - t"});
  const auto cert = etale_check(x);
  ASSERT_TRUE(cert.etale);
  const auto b = x.coordinate_ring();
  // det = 2y; inverse = y * t^{-1} / 2 = y * t * 3 / 2 (t^{-1} = 3t since t^2 = 2).
  EXPECT_EQ(cert.jacobian_det, b.normal_form(parse_poly("2*y", x.ring())));
  EXPECT_EQ(*cert.inverse, b.normal_form(parse_poly("3*y*t*3", x.ring())));
}

TEST(Etale, Failures) {
  const auto a = alg(5, {"eps"}, {"eps^2"});
  try {
    etale_check(scheme(a, {}, {"eps"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSquareSystem);
  }
  const auto nonred = etale_check(scheme(alg(5, {"t"}, {"t"}), {"y"}, {"y^2"}));
  EXPECT_FALSE(nonred.etale);
  EXPECT_FALSE(nonred.obstruction.empty());
  try {
    etale_check(scheme(alg(5, {"t"}, {"t"}), {"y", "z"}, {"y*z", "y*z"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFinite);
  }
  try {
    etale_check(scheme(alg(5, {"t"}, {"1"}), {"y"}, {"y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyBase);
  }
}
