#include "bolalg/displays.hpp"

#include "bolalg/algebra.hpp"
#include "bolalg/classification.hpp"
#include "bolalg/closed_form.hpp"
#include "bolalg/group.hpp"
#include "bolalg/loop.hpp"
#include "bolalg/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>

namespace bolalg {

namespace {

constexpr double kMatchTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

DisplayAudit numeric(std::string id, std::string location, double deviation, double tol,
                     const std::string& mismatch) {
  DisplayAudit a{std::move(id), std::move(location), deviation <= tol, deviation, ""};
  a.detail = a.matched ? "agrees to " + fmt(deviation) : mismatch + " (deviation " + fmt(deviation) + ")";
  return a;
}

DisplayAudit claim(std::string id, std::string location, bool holds, const std::string& ok,
                   const std::string& mismatch) {
  return {std::move(id), std::move(location), holds, holds ? 0.0 : 1.0, holds ? ok : mismatch};
}

Eigen::Vector4d random_group_point(Rng& rng, double r) {
  Eigen::Vector4d g;
  for (int k = 0; k < 4; ++k) g(k) = rng.uniform(-r, r);
  return g;
}

LoopPoint random_loop_point(Rng& rng, double r, double min_v = 0.0) {
  LoopPoint p;
  for (int k = 0; k < 3; ++k) p(k) = rng.uniform(-r, r);
  if (std::abs(p(2)) < min_v) p(2) = p(2) < 0 ? -min_v : min_v;
  return p;
}

struct Sampled {
  double worst = 0.0;
  int failures = 0;  // samples where the display had no value (no root, non-finite)

  void merge(const Sampled& o) {
    worst = std::max(worst, o.worst);
    failures += o.failures;
  }
};

Sampled max_over(int n, const std::function<double()>& sample) {
  Sampled s;
  for (int i = 0; i < n; ++i) {
    try {
      const double d = sample();
      if (std::isfinite(d))
        s.worst = std::max(s.worst, d);
      else
        ++s.failures;
    } catch (const std::exception&) {
      ++s.failures;
    }
  }
  return s;
}

DisplayAudit sampled(std::string id, std::string location, const Sampled& s, int n, double tol,
                     const std::string& mismatch) {
  DisplayAudit a = numeric(std::move(id), std::move(location), s.worst, tol, mismatch);
  if (s.failures > 0) {
    a.matched = false;
    a.detail = mismatch + " (deviation " + fmt(s.worst) + ", undefined on " +
               std::to_string(s.failures) + " of " + std::to_string(n) + " samples)";
  }
  return a;
}

std::vector<LoopChart> audit_charts(WebCase wc, Sign sign) {
  std::vector<LoopChart> out;
  LoopChart c;
  c.sign = sign;
  c.web_case = wc;
  if (wc == WebCase::case1) return {c};
  for (double y : {0.0, 1.0, 2.0}) {
    c.y = y;
    out.push_back(c);
  }
  return out;
}

std::string chart_id(WebCase wc, Sign sign) {
  return to_string(sign) + (wc == WebCase::case1 ? "1" : "2");
}

// ---------------------------------------------------------------------------

void group_law(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const double dev = max_over(n, [&] {
      const auto a = random_group_point(rng, 0.3), b = random_group_point(rng, 0.3);
      return (closed_form::group_compose(a, b, sign) - group_compose(a, b, sign))
          .lpNorm<Eigen::Infinity>();
    }).worst;
    const double assoc = max_over(n, [&] {
      const auto a = random_group_point(rng, 0.3), b = random_group_point(rng, 0.3),
                 c = random_group_point(rng, 0.3);
      auto mul = [sign](const GroupPoint& l, const GroupPoint& r) {
        return closed_form::group_compose(l, r, sign);
      };
      return (mul(mul(a, b), c) - mul(a, mul(b, c))).lpNorm<Eigen::Infinity>();
    }).worst;
    out.push_back(numeric("group-law-" + to_string(sign),
                          std::string("group multiplication, ") +
                              (sign == Sign::minus ? "circular" : "hyperbolic") + " type",
                          dev, kMatchTol,
                          "the closed-form law is not associative (defect " + fmt(assoc) +
                              ") and differs from the rotated-central-term law"));
  }
}

void section_maps(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const double dev = max_over(n, [&] {
      const LoopPoint p = random_loop_point(rng, 0.5, 1e-2);
      return (closed_form::exp_B(p, sign) - exp_B(p, sign)).lpNorm<Eigen::Infinity>();
    }).worst;
    out.push_back(numeric("section-exp-" + to_string(sign), "exponential map on B in coordinates",
                          dev, kMatchTol,
                          "signs of the x1 and x4 terms disagree with exp computed in the "
                          "faithful representation"));
  }
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const double dev = max_over(n, [&] {
      const LoopPoint p = random_loop_point(rng, 0.5, 1e-2);
      return (closed_form::exp_inv(exp_B(p, sign), sign) - p).lpNorm<Eigen::Infinity>();
    }).worst;
    out.push_back(numeric("section-log-" + to_string(sign), "inverse of the exponential on B",
                          dev, kMatchTol, "does not invert the exponential on B"));
  }
}

void h_curves(std::vector<DisplayAudit>& out) {
  for (WebCase wc : {WebCase::case1, WebCase::case2})
    for (Sign sign : {Sign::minus, Sign::plus}) {
      double dev = 0.0, closure = 0.0;
      for (const LoopChart& chart : audit_charts(wc, sign))
        for (double a : {-0.4, -0.1, 0.2, 0.5}) {
          dev = std::max(dev, (closed_form::h_curve(a) - group_exp(a * chart.h_direction(), sign))
                                  .lpNorm<Eigen::Infinity>());
          const GroupPoint ab =
              group_compose(closed_form::h_curve(a), closed_form::h_curve(0.3), sign);
          closure = std::max(closure, std::abs(ab(2) - ab(3)) + std::abs(ab(1)));
        }
      out.push_back(numeric("h-curve-" + chart_id(wc, sign),
                            "one-parameter subgroup H for the " + chart_id(wc, sign) + " chart",
                            dev, kMatchTol,
                            "{(0,0,a,a)} is not exp of the h direction and is not closed under "
                            "the group law (defect " +
                                fmt(closure) + ")"));
    }
}

void decompositions(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  for (WebCase wc : {WebCase::case1, WebCase::case2})
    for (Sign sign : {Sign::minus, Sign::plus}) {
      const auto charts = audit_charts(wc, sign);
      const int per_chart = n / static_cast<int>(charts.size());
      Sampled dev;
      for (const LoopChart& chart : charts)
        dev.merge(max_over(per_chart, [&] {
                         const GroupPoint g = random_group_point(rng, 0.3);
                         return (closed_form::project_to_section(g, chart).section -
                                 project_to_section(g, chart).section)
                             .lpNorm<Eigen::Infinity>();
                       }));
      out.push_back(sampled("decomposition-" + chart_id(wc, sign),
                            "factorisation g = b h for the " + chart_id(wc, sign) + " chart", dev,
                            per_chart * static_cast<int>(charts.size()), kMatchTol, "the closed-form factor b differs from the exact G = BH split"));
    }
}

void loop_laws(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  for (WebCase wc : {WebCase::case1, WebCase::case2})
    for (Sign sign : {Sign::minus, Sign::plus}) {
      const auto charts = audit_charts(wc, sign);
      const int per_chart = n / static_cast<int>(charts.size());
      Sampled dev;
      for (const LoopChart& chart : charts)
        dev.merge(max_over(per_chart, [&] {
                         const LoopPoint a = random_loop_point(rng, 0.3 / std::sqrt(3.0), 1e-2);
                         const LoopPoint b = random_loop_point(rng, 0.3 / std::sqrt(3.0), 1e-2);
                         return (closed_form::loop_compose(a, b, chart) -
                                 loop_compose(a, b, chart))
                             .lpNorm<Eigen::Infinity>();
                       }));
      out.push_back(sampled("loop-law-" + chart_id(wc, sign),
                            "loop multiplication for the " + chart_id(wc, sign) + " chart", dev,
                            per_chart * static_cast<int>(charts.size()), kMatchTol, "the closed-form loop law differs from the computed one"));
    }
}

void adjoint(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  const double ad_dev = max_over(n, [&] {
    const Eigen::Vector3d xi = random_loop_point(rng, 1.0);
    return (ad_matrix_literal(xi) - ad_matrix<double>(xi, Sign::minus)).lpNorm<Eigen::Infinity>();
  }).worst;
  out.push_back(numeric("ad-matrix", "matrix of ad(u e1 + v e2 + p e3)", ad_dev, kMatchTol,
                        "differs from the structure constants"));

  const double big_dev = max_over(n, [&] {
    const Eigen::Vector3d xi = random_loop_point(rng, 1.0, 1e-2);
    return (Ad_literal(xi) - Ad(xi, Sign::minus)).lpNorm<Eigen::Infinity>();
  }).worst;
  out.push_back(numeric("Ad-matrix", "matrix of Ad(exp(u e1 + v e2 + p e3))", big_dev, kMatchTol,
                        "one off-diagonal entry has the wrong sign relative to exp(ad)"));

  const double iso_dev = max_over(n, [&] {
    const Eigen::Vector3d xi = random_loop_point(rng, 1.0, 1e-2);
    const double y = rng.uniform(-0.5, 0.5);
    const auto [xp, yp] = isotopy_transform_literal(xi, y);
    const ParamsD t = isotopy_transform(xi, {Sign::minus, 0.0, y, 0.0});
    return std::max(std::abs(xp - t.x), std::abs(yp - t.y));
  }).worst;
  out.push_back(numeric("isotopy-transform", "image of <e4 + y e2> under Ad(exp xi)", iso_dev,
                        kMatchTol, "differs from Ad(exp xi) applied to the line"));
}

void automorphisms(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  bool all_ok = true;
  bool literal_ok = true;
  for (Sign sign : {Sign::minus, Sign::plus})
    for (int i = 0; i < n / 10; ++i) {
      AutoParams p;
      do p.b = rng.rational(4, 3);
      while (is_zero(p.b));
      p.f = rng.rational(4, 3);
      p.d = rng.rational(4, 3);
      p.eps = rng.integer(0, 1) ? 1 : -1;
      const SubalgebraParams s{sign, rng.rational(4, 3), rng.rational(4, 3), rng.rational(4, 3)};
      const Algebra src = family_bol(s);
      const Algebra dst = family_bol(action_on_params(p, s));
      all_ok = all_ok && is_morphism(auto_matrix(p, sign), src, dst);
      literal_ok = literal_ok && is_morphism(auto_matrix_literal(p), src, dst);
    }
  out.push_back(claim("automorphism-matrix", "automorphism group of the trilinear system",
                      literal_ok && all_ok, "every sampled matrix is a morphism",
                      all_ok ? "the (1,2) entry must be eps*sigma*f*b; as written the matrix "
                               "is not a morphism when eps = -sigma and f != 0"
                             : "corrected matrices also fail (internal error)"));

  bool action_ok = true;
  for (Sign sign : {Sign::minus, Sign::plus})
    for (int i = 0; i < n / 10; ++i) {
      AutoParams p;
      do p.b = rng.rational(4, 3);
      while (is_zero(p.b));
      p.f = rng.rational(4, 3);
      p.d = rng.rational(4, 3);
      p.eps = rng.integer(0, 1) ? 1 : -1;
      const SubalgebraParams s{sign, rng.rational(4, 3), rng.rational(4, 3), rng.rational(4, 3)};
      action_ok = action_ok && action_on_params_literal(p, s) == action_on_params(p, s);
    }
  out.push_back(claim("automorphism-action", "induced action on (x, y, z)", action_ok,
                      "matches the action derived from the morphism equations",
                      "the y f and z d terms need the factor sigma and the y' formula its sign"));
}

void iso_classification(std::vector<DisplayAudit>& out) {
  const bool z_to_zero =
      solve_iso_witness({Sign::minus, 0, 0, 1}, {Sign::minus, 0, 0, 0}).has_value();
  out.push_back(claim("z-reduction", "reduction of the z != 0 case", z_to_zero,
                      "(0,0,1) is isomorphic to the trivial product",
                      "no automorphism sends z != 0 to (0,0,0): z' = z/b never vanishes"));

  for (Sign sign : {Sign::minus, Sign::plus}) {
    const SubalgebraParams xcase{sign, 1, 0, 0};
    bool reached = false;
    for (const SubalgebraParams& rep :
         {SubalgebraParams{sign, 0, 0, 1}, SubalgebraParams{sign, 0, 0, 0},
          SubalgebraParams{sign, 0, 1, 0}})
      reached = reached || solve_iso_witness(xcase, rep).has_value();
    out.push_back(claim("iso-list-" + to_string(sign),
                        "list of isomorphism classes, " + to_string(sign) + " type", reached,
                        "(1,0,0) is covered by a listed class",
                        "the class of (1,0,0), e2.e3 = -e1, is missing from the list"));
  }

  const Algebra plus = family_bol({Sign::plus, 0, 0, 1});
  const Rational coeff = plus.trilinear(1, 2, 2, 1);
  out.push_back(claim("plus-first-trilinear", "first item of the plus-type list", coeff == 1,
                      "(e2,e3,e3) = e2",
                      "(e2,e3,e3) = -e2 for the plus type; +e2 is the minus-type value"));
}

void isotopy_classification(std::vector<DisplayAudit>& out) {
  const bool merged =
      solve_iso_witness(representative({ClassKind::isotopy_e2, Sign::minus, 0}),
                        representative({ClassKind::isotopy_e1e2, Sign::minus, 0}))
          .has_value();
  out.push_back(claim("isotopy-list-minus", "isotopy classes, minus type", !merged,
                      "the listed representatives are pairwise non-isomorphic",
                      "-e2 and -e1 - e2 are already isomorphic (b = 1, f = 0, d = 1)"));

  const ParamsD plus_e2 = to_double(representative({ClassKind::isotopy_e2, Sign::plus, 0}));
  const auto reach = orbit_search(plus_e2, default_orbit_grid());
  out.push_back(claim("isotopy-list-plus", "isotopy classes, plus type",
                      !reach.count(ClassKind::isotopy_trivial),
                      "+e2 and the trivial product are distinct",
                      "+e2 is isotopic to the trivial product"));

  OrbitGrid no_swap = default_orbit_grid();
  no_swap.use_swap = false;
  const auto direct = orbit_search({Sign::minus, 0, 2, 0}, no_swap);
  const bool direct_hits = direct.count(ClassKind::isotopy_e2) || direct.count(ClassKind::isotopy_e1e2);
  out.push_back(claim("normalise-y", "normalisation y' = 1 by Ad(exp xi)", direct_hits,
                      "reachable without the swap automorphism",
                      "for |y| > 1 the value y' = +-1 needs the swap e2 <-> e4 first"));

  bool solvable = true;
  for (double y : {0.5, 1.0, 2.0}) solvable = solvable && solve_isotopy_p(y).has_value();
  out.push_back(claim("p-from-y", "choice of p with y = sinh p/(cosh p - 1)", solvable,
                      "solvable for every sampled y",
                      "coth(p/2) = y has no real root for |y| <= 1"));
}

void structure(std::vector<DisplayAudit>& out, Rng& rng, int n) {
  bool bol = true, induced = true;
  for (Sign sign : {Sign::minus, Sign::plus})
    for (int i = 0; i < std::max(1, n / 50); ++i) {
      const SubalgebraParams s{sign, rng.rational(5, 3), rng.rational(5, 3), rng.rational(5, 3)};
      const Algebra fam = family_bol(s);
      bol = bol && check_bol(fam).ok();
      Algebra ind = induced_bol(subalgebra_pair(s));
      ind.label = fam.label;
      induced = induced && ind == fam;
    }
  out.push_back(claim("family-bol", "Bol identities for the Type V family", bol,
                      "both identities hold for every sampled member", "an identity fails"));
  out.push_back(claim("induced-family", "Bol algebra induced by (g4, h)", induced,
                      "the induced products equal the family tables", "the induced products differ"));

  bool iso = true, pseudo = true;
  for (int i = 0; i < std::max(1, n / 50); ++i) {
    const int dim = 3;
    VecQ alpha(dim);
    MatQ beta(dim, dim);
    for (int k = 0; k < dim; ++k) alpha(k) = rng.rational(3, 2);
    for (int r = 0; r < dim; ++r)
      for (int c = r; c < dim; ++c) beta(r, c) = beta(c, r) = rng.rational(3, 2);
    const Algebra a = make_isocline<Rational>(dim, alpha, beta);
    iso = iso && check_bol(a).ok();
    pseudo = pseudo && check_pseudo_derivation(a).ok() == check_bol(a).ok();
  }
  out.push_back(claim("isocline", "isocline Bol algebras", iso,
                      "every sampled isocline algebra is Bol", "an isocline algebra fails"));
  out.push_back(claim("pseudo-derivation", "pseudo-derivation form of the Bol identity", pseudo,
                      "agrees with the identity check", "disagrees with the identity check"));

  bool bol_condition = true;
  for (Sign sign : {Sign::minus, Sign::plus}) {
    const EnvelopingReport r = check_enveloping(subalgebra_pair({sign, 1, -2, 3}));
    bol_condition = bol_condition && r.ok();
  }
  out.push_back(claim("bol-condition", "[[B,B],B] inside B for the family", bol_condition,
                      "holds for the sampled pairs", "fails"));

  double tangent = 0.0;
  for (WebCase wc : {WebCase::case1, WebCase::case2})
    for (Sign sign : {Sign::minus, Sign::plus})
      for (const LoopChart& chart : audit_charts(wc, sign))
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const LoopPoint xi = LoopPoint::Unit(i), eta = LoopPoint::Unit(j);
            tangent = std::max(tangent, (tangent_bilinear(chart, xi, eta, 1e-3) -
                                         exact_bilinear(chart, xi, eta))
                                            .lpNorm<Eigen::Infinity>());
          }
  out.push_back(numeric("tangent-product", "tangent product of the loops", tangent, 1e-3,
                        "the loop does not reproduce e2.e3"));

  const Eigen::Vector4d comm = commutator_estimate(2, 3, 1e-4, Sign::minus);
  const double expected = -sigma(Sign::minus);  // [e3,e4] = -sigma e2 in g4(minus)
  out.push_back(numeric("group-lie-type", "Lie algebra of the circular group",
                        std::abs(comm(1) - expected), 1e-3,
                        "the circular law integrates [e3,e4] = +e2, which is g4 of plus type"));
}

}  // namespace

std::vector<DisplayAudit> audit_displays(const AuditOptions& options) {
  if (options.samples < 10) throw std::invalid_argument("audit_displays: need at least 10 samples");
  Rng rng(options.seed);
  const int n = options.samples;
  std::vector<DisplayAudit> out;
  group_law(out, rng, n);
  section_maps(out, rng, n);
  h_curves(out);
  decompositions(out, rng, n);
  loop_laws(out, rng, n);
  adjoint(out, rng, n);
  automorphisms(out, rng, n);
  iso_classification(out);
  isotopy_classification(out);
  structure(out, rng, n);
  return out;
}

std::vector<Finding> findings_from(const std::vector<DisplayAudit>& audits) {
  std::vector<Finding> out;
  for (const DisplayAudit& a : audits)
    if (!a.matched) out.push_back({a.id, a.location, a.detail});
  return out;
}

Finding missing_xcase_finding(bool minus_type) {
  const std::string sign = minus_type ? "minus" : "plus";
  return {"iso-list-" + sign, "list of isomorphism classes, " + sign + " type",
          "the class of (1,0,0), e2.e3 = -e1, is missing from the list"};
}

}  // namespace bolalg
