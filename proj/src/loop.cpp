#include "bolalg/loop.hpp"

#include "bolalg/linalg.hpp"
#include "bolalg/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace bolalg {

LoopChart LoopChart::parse(std::string_view name, double y) {
  LoopChart c;
  if (name == "minus1" || name == "minus2") c.sign = Sign::minus;
  else if (name == "plus1" || name == "plus2") c.sign = Sign::plus;
  else throw std::invalid_argument("unknown chart '" + std::string(name) + "'");
  c.web_case = name.back() == '1' ? WebCase::case1 : WebCase::case2;
  if (c.web_case == WebCase::case2) {
    if (!(y >= 0) || !std::isfinite(y)) throw std::invalid_argument("chart y must be >= 0");
    c.y = y;
  }
  return c;
}

std::string LoopChart::name() const {
  std::string n = to_string(sign) + (web_case == WebCase::case1 ? "1" : "2");
  if (web_case == WebCase::case2) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "(y=%g)", y);
    n += buf;
  }
  return n;
}

Eigen::Vector4d LoopChart::h_direction() const {
  if (web_case == WebCase::case1) return {0, 0, 1, 1};
  return {0, y, 0, 1};
}

namespace {

GroupPoint factor_product(const Eigen::Vector4d& q, const LoopChart& chart) {
  const GroupPoint b = exp_B(q.head<3>(), chart.sign);
  const GroupPoint h = group_exp(q(3) * chart.h_direction(), chart.sign);
  return chart.side == CosetSide::left ? group_compose(b, h, chart.sign)
                                       : group_compose(h, b, chart.sign);
}

}  // namespace

SectionSplit project_to_section(const GroupPoint& g, const LoopChart& chart) {
  const Eigen::Vector4d h = chart.h_direction();
  Eigen::Vector4d q;
  // first-order guess: the section has no linear x4 term
  const double alpha0 = g(3);
  const Eigen::Vector4d rest = g - alpha0 * h;
  q << rest(0), rest(1), rest(2), alpha0;

  const double scale = 1.0 + g.lpNorm<Eigen::Infinity>();
  Eigen::Vector4d residual = factor_product(q, chart) - g;
  double best = residual.lpNorm<Eigen::Infinity>();
  int it = 0;
  int stalled = 0;
  for (; it < chart.tol.max_iter && best > chart.tol.newton * scale && stalled < 2; ++it) {
    Eigen::Matrix4d jac;
    for (int k = 0; k < 4; ++k) {
      const double step = 1e-7 * (1.0 + std::abs(q(k)));
      Eigen::Vector4d qp = q, qm = q;
      qp(k) += step;
      qm(k) -= step;
      jac.col(k) = (factor_product(qp, chart) - factor_product(qm, chart)) / (2 * step);
    }
    const Eigen::Vector4d next = q - jac.partialPivLu().solve(residual);
    if (!next.allFinite()) break;
    const Eigen::Vector4d next_residual = factor_product(next, chart) - g;
    const double norm = next_residual.lpNorm<Eigen::Infinity>();
    if (norm < best) {
      stalled = 0;
      best = norm;
    } else {
      ++stalled;
    }
    if (norm <= best) {
      q = next;
      residual = next_residual;
    }
  }
  if (!(best < 1e-12 * scale))
    throw std::runtime_error("project_to_section: no convergence, point outside the chart");
  return {exp_B(q.head<3>(), chart.sign), q(3), it};
}

SectionSplit project_to_section_scalar(const GroupPoint& g, const LoopChart& chart) {
  const Eigen::Vector4d h = chart.h_direction();
  auto strip = [&](double alpha) {
    const GroupPoint e = group_exp(-alpha * h, chart.sign);
    return chart.side == CosetSide::left ? group_compose(g, e, chart.sign)
                                         : group_compose(e, g, chart.sign);
  };
  auto f = [&](double alpha) { return section_defect(strip(alpha), chart.sign); };
  auto df = [&](double alpha) { return (f(alpha + 1e-7) - f(alpha - 1e-7)) / 2e-7; };
  NewtonOptions opts;
  opts.tol = 1e-15 * (1.0 + g.lpNorm<Eigen::Infinity>());
  const RootResult r = newton_root(f, df, g(3), opts);
  if (!r.converged && !(std::abs(f(r.x)) < 1e-13))
    throw std::runtime_error("project_to_section_scalar: no convergence");
  return {strip(r.x), r.x, r.iterations};
}

LoopPoint loop_compose(const LoopPoint& a, const LoopPoint& b, const LoopChart& chart) {
  const GroupPoint g = group_compose(exp_B(a, chart.sign), exp_B(b, chart.sign), chart.sign);
  return exp_inv(project_to_section(g, chart).section, chart.sign, chart.tol.section);
}

double check_left_bol(const LoopPoint& a, const LoopPoint& b, const LoopPoint& c,
                      const LoopChart& chart) {
  const LoopPoint lhs = loop_compose(a, loop_compose(b, loop_compose(a, c, chart), chart), chart);
  const LoopPoint rhs = loop_compose(loop_compose(a, loop_compose(b, a, chart), chart), c, chart);
  return (lhs - rhs).lpNorm<Eigen::Infinity>();
}

LoopPoint tangent_difference(const LoopChart& chart, const LoopPoint& xi, const LoopPoint& eta,
                             double eps) {
  const LoopPoint a = eps * xi, b = eps * eta;
  return (loop_compose(a, b, chart) - loop_compose(b, a, chart)) / (eps * eps);
}

LoopPoint tangent_bilinear(const LoopChart& chart, const LoopPoint& xi, const LoopPoint& eta,
                           double eps) {
  if (!(eps >= 1e-4 && eps <= 1e-1))
    throw std::invalid_argument("tangent_bilinear: eps outside [1e-4, 1e-1]");
  return 2 * tangent_difference(chart, xi, eta, eps / 2) - tangent_difference(chart, xi, eta, eps);
}

LoopPoint exact_bilinear(const LoopChart& chart, const LoopPoint& xi, const LoopPoint& eta) {
  // e2.e3 = -(projection of e4) = -x e1 - y e2 - z e3 for h = <e4 + x e1 + y e2 + z e3>
  const Eigen::Vector4d h = chart.h_direction();
  const LoopPoint e23 = -h.head<3>();
  const double c23 = xi(1) * eta(2) - xi(2) * eta(1);
  return c23 * e23;
}

std::vector<WebRow> sample_web(const LoopChart& chart, const WebGrid& grid) {
  if (grid.points_per_axis < 1) throw std::invalid_argument("sample_web: empty grid");
  const int n = grid.points_per_axis;
  std::vector<double> axis(n, 0.0);
  for (int i = 0; i < n && n > 1; ++i) axis[i] = -grid.radius + 2 * grid.radius * i / (n - 1);
  std::vector<LoopPoint> points;
  for (double t : axis)
    for (double u : axis)
      for (double v : axis) points.emplace_back(t, u, v);
  std::vector<WebRow> rows;
  rows.reserve(points.size() * points.size());
  for (const LoopPoint& a : points)
    for (const LoopPoint& b : points) rows.push_back({a, b, loop_compose(a, b, chart)});
  return rows;
}

void write_web_csv(const std::vector<WebRow>& rows, std::ostream& out) {
  out << "a_t,a_u,a_v,b_t,b_u,b_v,ab_t,ab_u,ab_v\n";
  char buf[64];
  for (const WebRow& r : rows) {
    const double values[9] = {r.a(0), r.a(1), r.a(2), r.b(0), r.b(1), r.b(2),
                              r.ab(0), r.ab(1), r.ab(2)};
    for (int i = 0; i < 9; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", values[i]);
      out << buf << (i == 8 ? '\n' : ',');
    }
  }
}

BolStatistics bol_statistics(const LoopChart& chart, int samples, std::uint64_t seed,
                             double radius, int threads) {
  if (samples < 1) throw std::invalid_argument("bol_statistics: need at least one sample");
  Rng rng(seed);
  std::vector<std::array<LoopPoint, 3>> triples(samples);
  for (auto& t : triples)
    for (auto& p : t)
      for (int k = 0; k < 3; ++k) p(k) = rng.uniform(-radius, radius);

  std::vector<double> residuals(samples, 0.0);
  const int workers = std::clamp(threads, 1, samples);
  auto run = [&](int w) {
    for (int i = w; i < samples; i += workers)
      residuals[i] = check_left_bol(triples[i][0], triples[i][1], triples[i][2], chart);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  BolStatistics s;
  s.samples = samples;
  s.max_residual = *std::max_element(residuals.begin(), residuals.end());
  s.mean_residual = std::accumulate(residuals.begin(), residuals.end(), 0.0) / samples;
  std::vector<double> sorted = residuals;
  std::nth_element(sorted.begin(), sorted.begin() + samples / 2, sorted.end());
  s.median_residual = sorted[samples / 2];
  return s;
}

}  // namespace bolalg
