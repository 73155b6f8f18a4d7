#include "bolalg/closed_form.hpp"

#include "bolalg/linalg.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace bolalg::closed_form {

namespace {

// circular for minus, hyperbolic for plus
struct Trig {
  Sign sign;
  double sn(double x) const { return sign == Sign::minus ? std::sin(x) : std::sinh(x); }
  double cs(double x) const { return sign == Sign::minus ? std::cos(x) : std::cosh(x); }
};

double solve_near(const std::function<double(double)>& f, double x0) {
  auto df = [&](double x) { return (f(x + 1e-7) - f(x - 1e-7)) / 2e-7; };
  NewtonOptions opts;
  opts.tol = 1e-14;
  opts.bracket = std::make_pair(x0 - 1.0, x0 + 1.0);
  const RootResult r = newton_root(f, df, x0, opts);
  if (!r.converged) throw std::runtime_error("closed form: scalar relation has no root");
  return r.x;
}

}  // namespace

GroupPoint group_compose(const GroupPoint& a, const GroupPoint& b, Sign sign) {
  const Trig tr{sign};
  const double c = tr.cs(a(2)), s = tr.sn(a(2));
  return GroupPoint(a(0) + b(0) + 0.5 * (a(3) * b(1) - b(3) * a(1)), a(1) + b(1) * c - b(3) * s,
                    a(2) + b(2), a(3) - b(1) * s + b(3) * c);
}

GroupPoint exp_B(const LoopPoint& p, Sign sign) {
  const Trig tr{sign};
  const double t = p(0), u = p(1), v = p(2);
  return GroupPoint(t + (v - tr.sn(v)) * u * u / (2 * v * v), u / v * tr.sn(v), v,
                    u / v * (1 - tr.cs(v)));
}

LoopPoint exp_inv(const GroupPoint& g, Sign sign) {
  const Trig tr{sign};
  const double x1 = g(0), x2 = g(1), x3 = g(2);
  const double s = tr.sn(x3);
  return LoopPoint(x1 - x2 * x2 * s * s / (2 * x3 * x3 * x3) +
                       x2 * x2 * s * s * s / (2 * x3 * x3 * x3 * x3),
                   x2 / x3 * s, x3);
}

GroupPoint h_curve(double alpha) { return GroupPoint(0, 0, alpha, alpha); }

SectionSplit project_to_section(const GroupPoint& g, const LoopChart& chart) {
  const Trig tr{chart.sign};
  const double x1 = g(0), x2 = g(1), x3 = g(2), x4 = g(3);
  if (chart.web_case == WebCase::case1) {
    auto rel = [&](double v) {
      const double w = x3 - v;
      return (x4 - w * tr.cs(v)) * tr.sn(v) - (x2 + w * tr.cs(v)) * (tr.cs(v) - 1);
    };
    const double v = solve_near(rel, x3);
    const double w = x3 - v;
    GroupPoint b;
    if (chart.sign == Sign::minus)
      b << x1 + w * (x2 + w * std::sin(v)) / 2, x2 + w * std::sin(v), v, x4 - w * std::cos(v);
    else  // first row hyperbolic, the next two circular
      b << x1 + w * (x2 + w * std::sinh(v)) / 2, x2 + w * std::sin(v), v, x4 - w * std::cos(v);
    return {b, w, 0};
  }
  const double y = chart.y;
  const double s = tr.sn(x3), c = tr.cs(x3);
  const double den = y - y * c + s;
  const double big_a = x3 * (x2 * (y * s + c) - x4 * (y * c - s)) / den;
  const double big_b = (x4 * s - x2 * (1 - c)) / den;
  GroupPoint b(x1 + big_a * big_b * (y - y * c - s) / (2 * x3), big_a * s / x3, x3,
               big_a * (1 - c) / x3);
  return {b, big_b, 0};
}

double t_relation(const LoopPoint& a, const LoopPoint& b, Sign sign, double T) {
  const Trig tr{sign};
  const double u = a(1), v = a(2), u2 = b(1), v2 = b(2);
  const double w = v + v2 - T;
  return (u * tr.sn(v) - w * tr.cs(T)) * tr.sn(T) -
         (u + u2 * tr.cs(v) + w * tr.cs(T)) * (tr.cs(T) - 1);
}

LoopPoint loop_compose(const LoopPoint& a, const LoopPoint& b, const LoopChart& chart) {
  const Trig tr{chart.sign};
  const double t = a(0), u = a(1), v = a(2);
  const double t2 = b(0), u2 = b(1), v2 = b(2);
  const double s = v + v2;
  if (chart.web_case == WebCase::case1) {
    const double T = solve_near([&](double x) { return t_relation(a, b, chart.sign, x); }, s);
    const double w = s - T;
    const double lead = u + u2 * tr.cs(v);
    const double inner = lead + w * tr.sn(T);
    const double sT = tr.sn(T);
    const double f = t + t2 + w * lead / 2 + w * w / 2 * sT -
                     inner * inner / (2 * T * T * T * T) * (T - sT) * sT * sT;
    return LoopPoint(f, inner * sT / T, T);
  }
  const double y = chart.y;
  const double ss = tr.sn(s), cs = tr.cs(s);
  const double den = y - y * cs + ss;
  const double lead = u + u2 * tr.cs(v);
  const double lambda = lead * (y * ss + cs) - u * tr.sn(v) * (y * cs - ss);
  const double ap = s * lambda / den;
  const double bp = (u * tr.sn(v) * ss - lead * (1 - cs)) / den;
  const double cp = ap * bp * (y - y * cs - ss) / s +
                    ap * ap * std::pow(ss, 4) / (2 * std::pow(s, 4)) * (-1 + cs) / s;
  return LoopPoint(t + t2 - cp, ap * ss * ss / (s * s), s);
}

}  // namespace bolalg::closed_form
