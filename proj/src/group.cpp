#include "bolalg/group.hpp"

#include "bolalg/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace bolalg {

namespace {

const Eigen::Matrix2d kOmega = (Eigen::Matrix2d() << 0, -1, 1, 0).finished();

// d/dc R_c at c = 0
Eigen::Matrix2d generator(Sign sign) {
  Eigen::Matrix2d j;
  if (sign == Sign::minus)
    j << 0, 1, -1, 0;
  else
    j << 0, -1, -1, 0;
  return j;
}

}  // namespace

Eigen::Matrix2d rotation(double c, Sign sign) {
  Eigen::Matrix2d r;
  if (sign == Sign::minus)
    r << std::cos(c), std::sin(c), -std::sin(c), std::cos(c);
  else
    r << std::cosh(c), -std::sinh(c), -std::sinh(c), std::cosh(c);
  return r;
}

GroupPoint group_compose(const GroupPoint& a, const GroupPoint& b, Sign sign) {
  const Eigen::Vector2d wa(a(1), a(3)), wb(b(1), b(3));
  const Eigen::Vector2d moved = rotation(a(2), sign) * wb;
  const Eigen::Vector2d w = wa + moved;
  GroupPoint out;
  out << a(0) + b(0) + 0.5 * wa.dot(kOmega * moved), w(0), a(2) + b(2), w(1);
  return out;
}

GroupPoint group_inverse(const GroupPoint& a, Sign sign) {
  const Eigen::Vector2d w = -(rotation(-a(2), sign) * Eigen::Vector2d(a(1), a(3)));
  return GroupPoint(-a(0), w(0), -a(2), w(1));
}

Eigen::Matrix4d group_matrix(const GroupPoint& g, Sign sign) {
  const Eigen::Matrix2d r = rotation(g(2), sign);
  const Eigen::Vector2d w(g(1), g(3));
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<1, 2>(0, 1) = w.transpose() * kOmega * r;
  m(0, 3) = 2 * g(0);
  m.block<2, 2>(1, 1) = r;
  m.block<2, 1>(1, 3) = w;
  return m;
}

GroupPoint group_exp(const Eigen::Vector4d& x, Sign sign) {
  const Eigen::Vector2d w(x(1), x(3));
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(4, 4);
  rho.block<1, 2>(0, 1) = w.transpose() * kOmega;
  rho(0, 3) = 2 * x(0);
  rho.block<2, 2>(1, 1) = x(2) * generator(sign);
  rho.block<2, 1>(1, 3) = w;
  const Eigen::MatrixXd m = mat_exp(rho);
  return GroupPoint(0.5 * m(0, 3), m(1, 3), x(2), m(2, 3));
}

SectionKernels section_kernels(double v, Sign sign) {
  const double v2 = v * v;
  if (std::abs(v) < 1e-4) {
    const double s = sign == Sign::minus ? -1.0 : 1.0;
    return {1 + s * v2 / 6 + v2 * v2 / 120 + s * v2 * v2 * v2 / 5040,
            v / 2 + s * v * v2 / 24 + v * v2 * v2 / 720,
            v / 6 + s * v * v2 / 120 + v * v2 * v2 / 5040};
  }
  if (sign == Sign::minus)
    return {std::sin(v) / v, (1 - std::cos(v)) / v, (v - std::sin(v)) / v2};
  return {std::sinh(v) / v, (std::cosh(v) - 1) / v, (std::sinh(v) - v) / v2};
}

GroupPoint exp_B(const LoopPoint& p, Sign sign) {
  const double t = p(0), u = p(1), v = p(2);
  const SectionKernels k = section_kernels(v, sign);
  return GroupPoint(t + 0.5 * u * u * k.k, u * k.s, v, -u * k.c);
}

double section_defect(const GroupPoint& g, Sign sign) {
  const SectionKernels k = section_kernels(g(2), sign);
  return g(3) + g(1) / k.s * k.c;
}

LoopPoint exp_inv(const GroupPoint& g, Sign sign, double tol) {
  if (!g.allFinite()) throw std::domain_error("exp_inv: non-finite group point");
  const SectionKernels k = section_kernels(g(2), sign);
  if (std::abs(k.s) < 1e-12) throw std::domain_error("exp_inv: outside the chart");
  const double u = g(1) / k.s;
  const double defect = g(3) + u * k.c;
  if (std::abs(defect) > tol * (1 + g.lpNorm<Eigen::Infinity>()))
    throw std::domain_error("exp_inv: point is off the section");
  return LoopPoint(g(0) - 0.5 * u * u * k.k, u, g(2));
}

Eigen::Vector4d commutator_estimate(int i, int j, double eps, Sign sign) {
  const GroupPoint a = group_exp(eps * Eigen::Vector4d::Unit(i), sign);
  const GroupPoint b = group_exp(eps * Eigen::Vector4d::Unit(j), sign);
  GroupPoint g = group_compose(a, b, sign);
  g = group_compose(g, group_inverse(a, sign), sign);
  g = group_compose(g, group_inverse(b, sign), sign);
  return g / (eps * eps);
}

}  // namespace bolalg
