#include "bolalg/enveloping.hpp"
#include "bolalg/rng.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bolalg;

namespace {

SubalgebraParams random_params(Rng& rng) {
  return {rng.integer(0, 1) ? Sign::minus : Sign::plus, rng.rational(6, 5), rng.rational(6, 5),
          rng.rational(6, 5)};
}

VecQ vec4(int a, int b, int c, int d) {
  VecQ v(4);
  v << a, b, c, d;
  return v;
}

// B part of v for G = <e1,e2,e3> + <h>, h = e4 + x e1 + y e2 + z e3.
VecQ dense_project(const SubalgebraParams& s, const VecQ& v) {
  VecQ h(4);
  h << s.x, s.y, s.z, 1;
  return v - v(3) * h;
}

}  // namespace

TEST(G4, StructureConstants) {
  const LieAlgebra g = g4(Sign::minus);
  EXPECT_EQ(bracket(g, vec4(0, 1, 0, 0), vec4(0, 0, 1, 0)), vec4(0, 0, 0, 1));
  EXPECT_EQ(bracket(g, vec4(0, 1, 0, 0), vec4(0, 0, 0, 1)), vec4(-1, 0, 0, 0));
  EXPECT_EQ(bracket(g, vec4(0, 0, 1, 0), vec4(0, 0, 0, 1)), vec4(0, -1, 0, 0));
  EXPECT_EQ(bracket(g4(Sign::plus), vec4(0, 0, 1, 0), vec4(0, 0, 0, 1)), vec4(0, 1, 0, 0));
}

TEST(Enveloping, FamilyPairsSatisfyTheBolCondition) {
  Rng rng(2);
  for (int n = 0; n < 40; ++n) {
    const EnvelopingReport r = check_enveloping(subalgebra_pair(random_params(rng)));
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(Enveloping, DerivedPartIsAllOfTheTopSlice) {
  // [[B,B],B] = 0 for B = <e1,e2,e4>
  const EnvelopingPair ok{g4(Sign::minus), {0, 1, 3}, {vec4(0, 0, 1, 0)}};
  const EnvelopingReport r = check_enveloping(ok);
  EXPECT_TRUE(r.direct_sum);
  EXPECT_TRUE(r.bol_condition);
}

TEST(Enveloping, ViolationReportsTheTriple) {
  // [[e2,e3],e2] = [e4,e2] = e1, outside <e2,e3,e4>
  const EnvelopingPair bad{g4(Sign::minus), {1, 2, 3}, {vec4(1, 0, 0, 0)}};
  const EnvelopingReport r = check_enveloping(bad);
  EXPECT_TRUE(r.direct_sum);
  EXPECT_FALSE(r.bol_condition);
  ASSERT_FALSE(r.violations.empty());
  bool found = false;
  for (const auto& t : r.violations) found = found || (t == std::array<int, 3>{1, 2, 1});
  EXPECT_TRUE(found);
  try {
    envelope(g4(Sign::minus), {1, 2, 3}, {vec4(1, 0, 0, 0)});
    FAIL() << "expected EnvelopingError";
  } catch (const EnvelopingError& e) {
    EXPECT_GE(e.triple()[0], 0);
  }
}

TEST(Enveloping, NonDirectSumRejected) {
  EXPECT_THROW(envelope(g4(Sign::plus), {0, 1, 2}, {vec4(1, 1, 0, 0)}), EnvelopingError);
  EXPECT_FALSE(check_enveloping({g4(Sign::plus), {0, 1, 2}, {vec4(1, 1, 0, 0)}}).direct_sum);
}

TEST(Enveloping, InducedEqualsFamily) {
  Rng rng(12);
  for (int n = 0; n < 60; ++n) {
    const SubalgebraParams s = random_params(rng);
    EXPECT_EQ(induced_bol(subalgebra_pair(s)), family_bol(s)) << family_label(s);
  }
}

TEST(Enveloping, ProjectionMatchesDenseOracle) {
  Rng rng(13);
  for (int n = 0; n < 30; ++n) {
    const SubalgebraParams s = random_params(rng);
    const EnvelopingPair pair = subalgebra_pair(s);
    VecQ v(4);
    for (int k = 0; k < 4; ++k) v(k) = rng.rational(4, 3);
    EXPECT_EQ(project_B(pair, v), dense_project(s, v));
  }
}

TEST(Enveloping, SabininTripleMatchesDenseOracle) {
  Rng rng(14);
  for (int n = 0; n < 20; ++n) {
    const SubalgebraParams s = random_params(rng);
    const EnvelopingPair pair = subalgebra_pair(s);
    const auto c = oracle::g4_dense(s.sign);
    VecQ a(3), b(3), d(3);
    for (int k = 0; k < 3; ++k) {
      a(k) = rng.rational(3, 2);
      b(k) = rng.rational(3, 2);
      d(k) = rng.rational(3, 2);
    }
    auto up = [](const VecQ& v) {
      VecQ w = VecQ::Zero(4);
      w.head(3) = v;
      return w;
    };
    const VecQ ab = oracle::dense_bracket(c, up(a), up(b));
    const VecQ full = oracle::dense_bracket(c, ab, up(d));
    const VecQ part = dense_project(s, oracle::dense_bracket(c, dense_project(s, ab), up(d)));
    const Rational half(1, 2);
    const VecQ expected = dense_project(s, VecQ(-half * full + half * part)).head(3);
    EXPECT_EQ(sabinin_triple(pair, a, b, d), expected);
    EXPECT_EQ(sabinin_triple(pair, b, a, d), VecQ(-expected));
  }
}

TEST(Enveloping, DerivedDimensionWithinBound) {
  Rng rng(15);
  for (int n = 0; n < 30; ++n) {
    const int d = derived_dimension(subalgebra_pair(random_params(rng)));
    EXPECT_GE(d, 0);
    EXPECT_LE(d, 3);
  }
  EXPECT_EQ(derived_dimension(subalgebra_pair({Sign::minus, 0, 0, 0})), 1);
}

TEST(Family, Label) {
  EXPECT_EQ(family_label({Sign::minus, 0, 0, 1}), "V-(0,0,1)");
  EXPECT_EQ(family_label({Sign::plus, Rational(1, 2), -3, 0}), "V+(1/2,-3,0)");
}
