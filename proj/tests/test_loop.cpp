#include "bolalg/loop.hpp"
#include "bolalg/rng.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace bolalg;

namespace {

std::vector<LoopChart> all_charts() {
  std::vector<LoopChart> out;
  for (const char* name : {"minus1", "plus1"}) out.push_back(LoopChart::parse(name));
  for (const char* name : {"minus2", "plus2"})
    for (double y : {0.0, 1.0, 2.0}) out.push_back(LoopChart::parse(name, y));
  return out;
}

LoopPoint random_loop(Rng& rng, double r) {
  return LoopPoint(rng.uniform(-r, r), rng.uniform(-r, r), rng.uniform(-r, r));
}

}  // namespace

TEST(Chart, ParseAndName) {
  EXPECT_EQ(LoopChart::parse("minus1").name(), "minus1");
  EXPECT_EQ(LoopChart::parse("plus2", 2).name(), "plus2(y=2)");
  EXPECT_THROW(LoopChart::parse("minus3"), std::invalid_argument);
  EXPECT_THROW(LoopChart::parse("plus2", -1), std::invalid_argument);
}

TEST(Projection, RecomposesTheGroupElement) {
  Rng rng(1);
  for (const LoopChart& chart : all_charts())
    for (int n = 0; n < 40; ++n) {
      const GroupPoint g(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                         rng.uniform(-0.3, 0.3));
      const SectionSplit s = project_to_section(g, chart);
      const GroupPoint back =
          group_compose(s.section, group_exp(s.alpha * chart.h_direction(), chart.sign), chart.sign);
      EXPECT_LT((back - g).lpNorm<Eigen::Infinity>(), 1e-10) << chart.name();
      EXPECT_LT(std::abs(section_defect(s.section, chart.sign)), 1e-12);
    }
}

TEST(Projection, ScalarRouteAgrees) {
  Rng rng(2);
  for (const LoopChart& chart : all_charts())
    for (int n = 0; n < 20; ++n) {
      const GroupPoint g(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                         rng.uniform(-0.3, 0.3));
      const SectionSplit a = project_to_section(g, chart), b = project_to_section_scalar(g, chart);
      EXPECT_LT((a.section - b.section).lpNorm<Eigen::Infinity>(), 1e-10) << chart.name();
      EXPECT_NEAR(a.alpha, b.alpha, 1e-10);
    }
}

TEST(Loop, TwoSidedIdentityAndSectionPointsCompose) {
  Rng rng(3);
  for (const LoopChart& chart : all_charts()) {
    const LoopPoint a = random_loop(rng, 0.2);
    EXPECT_LT((loop_compose(a, LoopPoint::Zero(), chart) - a).lpNorm<Eigen::Infinity>(), 1e-13);
    EXPECT_LT((loop_compose(LoopPoint::Zero(), a, chart) - a).lpNorm<Eigen::Infinity>(), 1e-13);
    // left inverse property of a left Bol loop: a^-1 = -a in exponential coordinates
    EXPECT_LT((loop_compose(-a, loop_compose(a, LoopPoint(0.05, -0.1, 0.02), chart), chart) -
               LoopPoint(0.05, -0.1, 0.02))
                  .lpNorm<Eigen::Infinity>(),
              1e-11)
        << chart.name();
  }
}

TEST(Loop, LeftBolOnEveryChart) {
  for (const LoopChart& chart : all_charts()) {
    const BolStatistics s = bol_statistics(chart, 200, 42, 0.1, 2);
    EXPECT_LT(s.max_residual, 1e-8) << chart.name();
    EXPECT_EQ(s.samples, 200);
  }
}

TEST(Loop, PowerAssociativeSpecialCase) {
  Rng rng(4);
  for (const LoopChart& chart : all_charts()) {
    const LoopPoint a = random_loop(rng, 0.1), b = random_loop(rng, 0.1);
    // c = 0 in the left Bol identity reduces it to a(ba) on both sides
    EXPECT_LT(check_left_bol(a, b, LoopPoint::Zero(), chart), 1e-10);
  }
}

TEST(Loop, WrongCosetSideIsNotBol) {
  for (LoopChart chart : all_charts()) {
    chart.side = CosetSide::right;
    EXPECT_GT(bol_statistics(chart, 1000, 42, 0.1, 4).max_residual, 1e-3) << chart.name();
  }
}

TEST(Loop, BolForRandomHDirections) {
  Rng rng(5);
  for (int n = 0; n < 6; ++n) {
    LoopChart chart = LoopChart::parse(n % 2 ? "minus2" : "plus2", rng.uniform(0, 3));
    EXPECT_LT(bol_statistics(chart, 40, 100 + n, 0.1, 1).max_residual, 1e-8) << chart.name();
  }
}

TEST(Loop, StatisticsIndependentOfThreadCount) {
  const LoopChart chart = LoopChart::parse("plus2", 1);
  const BolStatistics a = bol_statistics(chart, 64, 9, 0.1, 1);
  const BolStatistics b = bol_statistics(chart, 64, 9, 0.1, 4);
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.mean_residual, b.mean_residual);
  EXPECT_EQ(a.median_residual, b.median_residual);
  EXPECT_THROW(bol_statistics(chart, 0, 1), std::invalid_argument);
}

TEST(Tangent, RecoversBilinearProduct) {
  for (const LoopChart& chart : all_charts())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const LoopPoint xi = LoopPoint::Unit(i), eta = LoopPoint::Unit(j);
        const LoopPoint exact = exact_bilinear(chart, xi, eta);
        EXPECT_LT((tangent_bilinear(chart, xi, eta, 1e-3) - exact).lpNorm<Eigen::Infinity>(), 1e-5)
            << chart.name() << " " << i << j;
        const double e1 = (tangent_difference(chart, xi, eta, 2e-3) - exact).lpNorm<Eigen::Infinity>();
        const double e2 = (tangent_difference(chart, xi, eta, 1e-3) - exact).lpNorm<Eigen::Infinity>();
        if (e1 > 1e-9) {
          EXPECT_GE(std::log2(e1 / e2), 0.9);
        }
      }
}

TEST(Tangent, KnownValues) {
  const LoopPoint e2 = LoopPoint::Unit(1), e3 = LoopPoint::Unit(2);
  EXPECT_LT((tangent_bilinear(LoopChart::parse("minus1"), e2, e3, 1e-3) - LoopPoint(0, 0, -1))
                .lpNorm<Eigen::Infinity>(),
            1e-5);
  EXPECT_LT((tangent_bilinear(LoopChart::parse("plus2", 2), e2, e3, 1e-3) - LoopPoint(0, -2, 0))
                .lpNorm<Eigen::Infinity>(),
            1e-5);
  EXPECT_THROW(tangent_bilinear(LoopChart::parse("minus1"), e2, e3, 1.0), std::invalid_argument);
}

TEST(Web, GridShapeAndCsv) {
  const auto rows = sample_web(LoopChart::parse("minus2", 1), {2, 0.1});
  EXPECT_EQ(rows.size(), 64u);
  std::ostringstream out;
  write_web_csv(rows, out);
  const std::string csv = out.str();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 65);
  EXPECT_EQ(csv.rfind("a_t,a_u,a_v,b_t,b_u,b_v,ab_t,ab_u,ab_v\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}
