#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle/oracle.hpp"
#include "resweil/dsl.hpp"
#include "resweil/error.hpp"
#include "resweil/groebner.hpp"
#include "resweil/weilres.hpp"

using namespace resweil;

namespace {

MPoly P(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }

MPoly random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned max_deg, std::size_t terms) {
  const Field& f = r->field();
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, static_cast<unsigned>(rng() % (max_deg + 1)));
    ts.push_back({m, f.element_at(rng() % *f.order())});
  }
  return MPoly::from_terms(r, ts);
}

}  // namespace

TEST(MPoly, ArithmeticAndPrinting) {
  const RingPtr r = make_ring(Field::prime(7), {"y0", "y1"});
  const MPoly f = P(r, "2*y0*y1 - y1 - 1");
  EXPECT_EQ(f.to_string(), "2*y0*y1 - y1 - 1");
  EXPECT_EQ(P(r, "(y0 + 1)^2").to_string(), "y0^2 + 2*y0 + 1");
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(P(r, "3y0"), P(r, "3*y0"));
}

TEST(MPoly, SubstituteExpandBinomial) {
  const RingPtr r = make_ring(Field::prime(5), {"t", "y"});
  const RingPtr s = make_ring(Field::prime(5), {"t", "y0", "y1"});
  const MPoly f = P(r, "y^2");
  const MPoly out = substitute_expand(f, {{"y", P(s, "y0 + y1*t")}, {"t", P(s, "t")}}, s);
  EXPECT_EQ(out, P(s, "y0^2 + 2*y0*y1*t + y1^2*t^2"));
  // Identity assignment.
  EXPECT_EQ(substitute_expand(f, {MPoly::variable(r, 0), MPoly::variable(r, 1)}), f);
  EXPECT_THROW(substitute_expand(f, {MPoly::variable(r, 0)}), Error);
}

TEST(MPoly, SubstitutionComposes) {
  std::mt19937_64 rng(21);
  const RingPtr r = make_ring(Field::prime(5), {"a", "b"});
  for (int i = 0; i < 30; ++i) {
    const MPoly f = random_poly(r, rng, 2, 3);
    const std::vector<MPoly> s1{random_poly(r, rng, 1, 2), random_poly(r, rng, 1, 2)};
    const std::vector<MPoly> s2{random_poly(r, rng, 1, 2), random_poly(r, rng, 1, 2)};
    std::vector<MPoly> composed{substitute_expand(s1[0], s2), substitute_expand(s1[1], s2)};
    EXPECT_EQ(substitute_expand(substitute_expand(f, s1), s2), substitute_expand(f, composed));
  }
}

TEST(Groebner, UnitIdeal) {
  const RingPtr r = make_ring(Field::prime(5), {"x"});
  const auto gb = buchberger(r, {P(r, "x"), P(r, "x - 1")});
  EXPECT_TRUE(gb.is_unit());
  EXPECT_EQ(gb.standard_monomials()->size(), 0U);
}

TEST(Groebner, SingleGeneratorAndNormalForm) {
  const RingPtr r = make_ring(Field::prime(5), {"y"});
  const auto gb = buchberger(r, {P(r, "y^2 - 2")});
  ASSERT_EQ(gb.polys().size(), 1U);
  EXPECT_EQ(gb.polys()[0], P(r, "y^2 - 2"));
  EXPECT_EQ(gb.normal_form(P(r, "y^3")), P(r, "2*y"));
  EXPECT_TRUE(gb.normal_form(P(r, "y^4 - 4")).is_zero());
  const auto sm = gb.standard_monomials();
  ASSERT_TRUE(sm);
  EXPECT_EQ(sm->size(), 2U);
  EXPECT_TRUE((*sm)[0].is_one());
}

TEST(Groebner, DualNumberRestrictionHasTwoStandardMonomials) {
  const RingPtr r = make_ring(Field::prime(7), {"y0", "y1"});
  const std::vector<MPoly> gens{P(r, "y0^2 - y0"), P(r, "2*y0*y1 - y1 - 1")};
  const auto gb = buchberger(r, gens);
  EXPECT_EQ(gb.standard_monomials()->size(), 2U);
  for (const auto& g : gens) EXPECT_TRUE(gb.contains(g));
  // Oracle: exactly the two solutions (0, 6) and (1, 1).
  const auto brute = oracle::brute_points(gens, 2, Field::prime(7));
  ASSERT_EQ(brute.size(), 2U);
}

TEST(Groebner, InfiniteQuotient) {
  const RingPtr r = make_ring(Field::prime(5), {"x", "y"});
  EXPECT_FALSE(buchberger(r, {P(r, "x*y")}).standard_monomials().has_value());
}

TEST(Groebner, MixedContexts) {
  const RingPtr r = make_ring(Field::prime(5), {"x"});
  const RingPtr s = make_ring(Field::prime(7), {"x"});
  try {
    buchberger(r, {P(r, "x"), P(s, "x")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedContexts);
  }
  const auto gb = buchberger(r, {P(r, "x^2")});
  EXPECT_THROW(gb.normal_form(P(s, "x")), Error);
}

TEST(Groebner, StepGuard) {
  const RingPtr r = make_ring(Field::prime(5), {"x", "y", "z"});
  try {
    buchberger(r, {P(r, "x^2 - y"), P(r, "x*y - z"), P(r, "y^2 - x*z - 1")}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StepGuardExceeded);
  }
}

TEST(Groebner, IndependentOfGeneratorOrder) {
  std::mt19937_64 rng(4);
  const RingPtr r = make_ring(Field::prime(5), {"x", "y", "z"});
  for (int i = 0; i < 20; ++i) {
    std::vector<MPoly> gens{P(r, "x^2 - y"), P(r, "y^2 - z"), random_poly(r, rng, 2, 3), P(r, "z^3 - 1")};
    const auto base = buchberger(r, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(buchberger(r, gens), base);
  }
}

TEST(Groebner, NormalFormIdempotentAndLinear) {
  std::mt19937_64 rng(8);
  const RingPtr r = make_ring(Field::prime(7), {"x", "y"});
  const auto gb = buchberger(r, {P(r, "x^2 - y - 1"), P(r, "y^2 - 3*x")});
  for (int i = 0; i < 100; ++i) {
    const MPoly f = random_poly(r, rng, 4, 5), g = random_poly(r, rng, 4, 5);
    const MPoly nf = gb.normal_form(f);
    EXPECT_EQ(gb.normal_form(nf), nf);
    EXPECT_EQ(gb.normal_form(f + g), nf + gb.normal_form(g));
  }
}

TEST(Points, DualNumberSystem) {
  const RingPtr r = make_ring(Field::prime(7), {"y0", "y1"});
  const Field f = Field::prime(7);
  const auto pts = enumerate_points({P(r, "y0^2 - y0"), P(r, "2*y0*y1 - y1 - 1")}, r, f);
  ASSERT_EQ(pts.size(), 2U);
  EXPECT_EQ(pts[0], (Point{f.from_int(0), f.from_int(6)}));
  EXPECT_EQ(pts[1], (Point{f.from_int(1), f.from_int(1)}));
  EXPECT_TRUE(enumerate_points({P(r, "1")}, r, f).empty());
}

TEST(Points, MatchesBruteForce) {
  const RingPtr r = make_ring(Field::prime(5), {"y0", "y1"});
  const std::vector<MPoly> sys{P(r, "y0^2 + 2*y1^2"), P(r, "2*y0*y1 - 1")};
  EXPECT_TRUE(enumerate_points(sys, r, Field::prime(5)).empty());
  const Field f625 = make_ext_field(5, 4);
  const auto pts = enumerate_points(sys, r, f625);
  EXPECT_EQ(pts.size(), 4U);
  const Field f25 = make_ext_field(5, 2);
  EXPECT_EQ(enumerate_points(sys, r, f25), oracle::brute_points(sys, 2, f25));
}

TEST(Points, PositiveDimensionalFallsBackToSearch) {
  const RingPtr r = make_ring(Field::prime(5), {"x", "y"});
  const std::vector<MPoly> sys{P(r, "x*y")};
  const auto pts = enumerate_points(sys, r, Field::prime(5));
  EXPECT_EQ(pts.size(), 9U);
  const RingPtr big = make_ring(Field::prime(7), {"a", "b", "c", "d", "e", "f", "g", "h"});
  try {
    enumerate_points({P(big, "a*b")}, big, Field::prime(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchGuardExceeded);
  }
}
