#include "bolalg/classification.hpp"
#include "bolalg/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bolalg;

namespace {

AutoParams random_auto(Rng& rng) {
  AutoParams p;
  do p.b = rng.rational(5, 3);
  while (is_zero(p.b));
  p.f = rng.rational(5, 3);
  p.d = rng.rational(5, 3);
  p.eps = rng.integer(0, 1) ? 1 : -1;
  return p;
}

SubalgebraParams random_params(Rng& rng, int max_num = 5) {
  // zeros are common so that every stratum gets exercised
  auto coord = [&] { return rng.integer(0, 2) == 0 ? Rational(0) : rng.rational(max_num, 3); };
  return {rng.integer(0, 1) ? Sign::minus : Sign::plus, coord(), coord(), coord()};
}

// Invariants of the action, read off from z' = z/b and y' = eps y when z = 0.
std::string invariant(const SubalgebraParams& s) {
  if (!is_zero(s.z)) return "z";
  if (!is_zero(s.y)) return "y=" + format_rational(abs(s.y));
  if (!is_zero(s.x)) return "x";
  return "0";
}

}  // namespace

TEST(AutoMatrix, IsMorphismOntoTheImage) {
  Rng rng(1);
  for (int n = 0; n < 100; ++n) {
    const AutoParams p = random_auto(rng);
    const SubalgebraParams s = random_params(rng);
    EXPECT_TRUE(is_morphism(auto_matrix(p, s.sign), family_bol(s), family_bol(action_on_params(p, s))));
  }
}

TEST(AutoMatrix, ExtensionIsLieAutomorphism) {
  Rng rng(2);
  for (int n = 0; n < 40; ++n) {
    const AutoParams p = random_auto(rng);
    for (Sign sign : {Sign::minus, Sign::plus})
      EXPECT_TRUE(is_lie_morphism(extend_to_G(p, sign), g4(sign), g4(sign)));
  }
}

TEST(AutoMatrix, LiteralFormFailsForOppositeEps) {
  AutoParams p{2, 1, 0, 1};
  const SubalgebraParams s{Sign::plus, 0, 0, 0};  // eps = -sigma
  EXPECT_FALSE(is_morphism(auto_matrix_literal(p), family_bol(s), family_bol(action_on_params(p, s))));
  p.eps = -1;
  const SubalgebraParams m{Sign::minus, 0, 0, 0};
  EXPECT_FALSE(
      is_morphism(auto_matrix_literal(p), family_bol(m), family_bol(action_on_params(p, m))));
}

TEST(AutoMatrix, ZeroBRejected) {
  EXPECT_THROW(auto_matrix({0, 1, 1, 1}, Sign::minus), std::invalid_argument);
}

TEST(CanonicalIso, WorkedExample) {
  const IsoResult r = canonical_form_iso({Sign::minus, 5, -2, 3});
  EXPECT_EQ(r.label.kind, ClassKind::iso_z);
  EXPECT_EQ(r.witness, (AutoParams{3, 2, -11, 1}));
  const SubalgebraParams img = action_on_params(r.witness, SubalgebraParams{Sign::minus, 5, -2, 3});
  EXPECT_EQ(img, (SubalgebraParams{Sign::minus, 0, 0, 1}));
}

TEST(CanonicalIso, Strata) {
  EXPECT_EQ(canonical_form_iso({Sign::plus, 0, 0, 0}).label.kind, ClassKind::iso_yfamily);
  EXPECT_EQ(canonical_form_iso({Sign::plus, 0, 0, 0}).label.parameter, 0);
  const IsoResult neg = canonical_form_iso({Sign::minus, 0, -4, 0});
  EXPECT_EQ(neg.label.kind, ClassKind::iso_yfamily);
  EXPECT_EQ(neg.label.parameter, 4);
  EXPECT_EQ(canonical_form_iso({Sign::minus, 7, 0, 0}).label.kind, ClassKind::iso_xcase);
  EXPECT_EQ(canonical_form_iso({Sign::plus, 1, 2, Rational(-1, 3)}).label.kind, ClassKind::iso_z);
}

TEST(CanonicalIso, WitnessReachesRepresentative) {
  Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    const SubalgebraParams s = random_params(rng);
    const IsoResult r = canonical_form_iso(s);
    EXPECT_EQ(action_on_params(r.witness, s), representative(r.label));
  }
}

TEST(CanonicalIso, OrbitInvariance) {
  Rng rng(4);
  for (int n = 0; n < 200; ++n) {
    const SubalgebraParams s = random_params(rng);
    const AutoParams p = random_auto(rng);
    EXPECT_EQ(canonical_form_iso(action_on_params(p, s)).label, canonical_form_iso(s).label);
  }
}

TEST(CanonicalIso, AgreesWithInvariants) {
  Rng rng(5);
  for (int n = 0; n < 60; ++n) {
    const SubalgebraParams a = random_params(rng, 2), b = random_params(rng, 2);
    SubalgebraParams b_same = b;
    b_same.sign = a.sign;
    const bool iso = solve_iso_witness(a, b_same).has_value();
    EXPECT_EQ(iso, invariant(a) == invariant(b_same)) << family_label(a) << " " << family_label(b_same);
    EXPECT_EQ(iso, canonical_form_iso(a).label == canonical_form_iso(b_same).label);
  }
}

TEST(CanonicalIso, ListedRepresentativesPairwiseDistinct) {
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const std::vector<SubalgebraParams> reps = {{sign, 0, 0, 1}, {sign, 0, 0, 0}, {sign, 0, 1, 0},
                                                {sign, 0, 2, 0}, {sign, 0, Rational(1, 3), 0},
                                                {sign, 1, 0, 0}};
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        EXPECT_EQ(solve_iso_witness(reps[i], reps[j]).has_value(), i == j)
            << family_label(reps[i]) << " vs " << family_label(reps[j]);
  }
}

TEST(Adjoint, AdMatrixFromStructureConstants) {
  const Mat<double> ad = ad_matrix<double>(Vec<double>(Eigen::Vector3d(0, 1, 0)), Sign::minus);
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected(3, 2) = 1;   // ad(e2) e3 = e4
  expected(0, 3) = -1;  // ad(e2) e4 = -e1
  EXPECT_EQ(Eigen::Matrix4d(ad), expected);
  EXPECT_TRUE(ad_matrix<double>(Vec<double>(Eigen::Vector3d::Zero()), Sign::plus).isZero(0));
}

TEST(Adjoint, AdIsInvertibleAutomorphism) {
  Rng rng(6);
  for (int n = 0; n < 30; ++n) {
    const Eigen::Vector3d xi(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    for (Sign sign : {Sign::minus, Sign::plus}) {
      const Eigen::Matrix4d a = Ad(xi, sign);
      EXPECT_LT((a * Ad(-xi, sign) - Eigen::Matrix4d::Identity()).lpNorm<Eigen::Infinity>(), 1e-10);
      // [A e_i, A e_j] = A [e_i, e_j]
      const LieAlgebra g = g4(sign);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          Eigen::Vector4d lhs = Eigen::Vector4d::Zero(), rhs = Eigen::Vector4d::Zero();
          for (const auto& [idx, c] : g.bracket.entries()) {
            lhs(idx[2]) += to_double(c) * a(idx[0], i) * a(idx[1], j);
            if (idx[0] == i && idx[1] == j) rhs += to_double(c) * a.col(idx[2]);
          }
          EXPECT_LT((lhs - rhs).lpNorm<Eigen::Infinity>(), 1e-9);
        }
    }
  }
}

TEST(Adjoint, ZeroIsIdentity) {
  EXPECT_LT((Ad(Eigen::Vector3d::Zero(), Sign::minus) - Eigen::Matrix4d::Identity()).norm(), 1e-15);
}

TEST(Isotopy, TransformOfZeroIsIdentity) {
  const ParamsD s{Sign::minus, 0.3, -0.7, 1.1};
  const ParamsD t = isotopy_transform(Eigen::Vector3d::Zero(), s);
  EXPECT_NEAR(t.x, s.x, 1e-15);
  EXPECT_NEAR(t.y, s.y, 1e-15);
  EXPECT_NEAR(t.z, s.z, 1e-15);
}

TEST(Isotopy, PureVShiftsX) {
  const ParamsD t = isotopy_transform(Eigen::Vector3d(0, 0.8, 0), {Sign::minus, 0, 0.4, 0});
  EXPECT_NEAR(t.x, -0.8, 1e-12);
  EXPECT_NEAR(t.y, 0.4, 1e-12);
}

TEST(Isotopy, ClosedFormCrossCheck) {
  Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const Eigen::Vector3d xi(0, rng.uniform(-1, 1), rng.uniform(0.1, 1));
    const double y = rng.uniform(-0.5, 0.5);
    const auto [x1, y1] = isotopy_transform_literal(xi, y);
    const ParamsD t = isotopy_transform(xi, {Sign::minus, 0, y, 0});
    EXPECT_NEAR(x1, t.x, 1e-9);
    EXPECT_NEAR(y1, t.y, 1e-9);
  }
}

TEST(Isotopy, PFromYClearsX) {
  for (double y : {2.0, 5.0, -3.0}) {
    const auto p = solve_isotopy_p(y);
    ASSERT_TRUE(p) << y;
    for (double v : {-1.0, 0.5, 2.0}) {
      const ParamsD t = isotopy_transform(Eigen::Vector3d(0, v, *p), {Sign::minus, 0, y, 0});
      EXPECT_NEAR(t.x, 0.0, 1e-10);
    }
  }
}

TEST(Isotopy, PFromYHasNoRealRootInsideUnitInterval) {
  for (double y : {0.5, 1.0, 0.0, -1.0}) EXPECT_FALSE(solve_isotopy_p(y)) << y;
}

TEST(Isotopy, ChartErrorWhenE4Vanishes) {
  // y = 1 is a null direction of the boost: cosh p - sinh p never vanishes, but
  // y = coth(p) makes the e4 coefficient vanish
  const double p = 0.7;
  EXPECT_THROW(isotopy_transform(Eigen::Vector3d(0, 0, p), {Sign::minus, 0, 1 / std::tanh(p), 0}),
               ChartError);
}

TEST(Isotopy, SwapIsAutomorphismOfMinusOnly) {
  EXPECT_TRUE(is_lie_morphism(swap_automorphism(), g4(Sign::minus), g4(Sign::minus)));
  EXPECT_FALSE(is_lie_morphism(swap_automorphism(), g4(Sign::plus), g4(Sign::plus)));
  const ParamsD t = apply_lie_automorphism(to_double(swap_automorphism()), {Sign::minus, 0, 4, 0});
  EXPECT_NEAR(t.y, 0.25, 1e-15);
}

TEST(CanonicalIsotopy, ListedExamples) {
  EXPECT_EQ(canonical_form_isotopy({Sign::minus, 0, 0, 1}).kind, ClassKind::isotopy_e3);
  EXPECT_EQ(canonical_form_isotopy({Sign::minus, 0, 0, 0}).kind, ClassKind::isotopy_trivial);
  EXPECT_EQ(canonical_form_isotopy({Sign::minus, 1, 1, 0}).kind, ClassKind::isotopy_e1e2);
  EXPECT_EQ(canonical_form_isotopy({Sign::minus, 0, -1, 0}).kind, ClassKind::isotopy_e2);
  EXPECT_EQ(canonical_form_isotopy({Sign::plus, 3, -2, 0}).kind, ClassKind::isotopy_e2);
  EXPECT_EQ(isotopy_representatives(Sign::minus).size(), 4u);
  EXPECT_EQ(isotopy_representatives(Sign::plus).size(), 3u);
}

TEST(CanonicalIsotopy, OrbitSearchReachesCanonicalClass) {
  Rng rng(8);
  const OrbitGrid grid = default_orbit_grid();
  for (int n = 0; n < 25; ++n) {
    SubalgebraParams s = random_params(rng, 3);
    if (n % 5 == 0) s.y = rng.integer(0, 1) ? 1 : -1;
    if (n % 5 == 0) s.z = 0;
    const ClassLabel label = canonical_form_isotopy(s);
    EXPECT_TRUE(orbit_search(to_double(s), grid).count(label.kind)) << family_label(s);
  }
}

TEST(CanonicalIsotopy, E3NeverMergesWithZEqualsZero) {
  // z = 0 is preserved by both Ad(exp B) on the line and by the automorphisms
  const auto reach = orbit_search({Sign::minus, 0.2, 0.4, 0}, default_orbit_grid());
  EXPECT_FALSE(reach.count(ClassKind::isotopy_e3));
  const auto from_e3 = orbit_search({Sign::plus, 0, 0, 1}, default_orbit_grid());
  EXPECT_EQ(from_e3, std::set<ClassKind>{ClassKind::isotopy_e3});
}
