#pragma once

#include "bolalg/enveloping.hpp"

#include <Eigen/Dense>

namespace bolalg {

/// (x1, x2, x3, x4) on G.
using GroupPoint = Eigen::Vector4d;
/// (t, u, v) on the section B.
using LoopPoint = Eigen::Vector3d;

// The sign selects the trigonometric type of the law: minus is circular,
// plus is hyperbolic. With w = (x2, x4), R_c the rotation (resp. boost) by c
// and omega(w, w') = w4 w'2 - w2 w'4,
//
//   (x1, w, c)(y1, w', c') = (x1 + y1 + omega(w, R_c w')/2, w + R_c w', c + c').
//
// Its Lie algebra is g4 of the opposite sign: see lie_sign().

inline Sign lie_sign(Sign chart_sign) { return opposite(chart_sign); }

Eigen::Matrix2d rotation(double c, Sign sign);

GroupPoint group_compose(const GroupPoint& a, const GroupPoint& b, Sign sign);
GroupPoint group_inverse(const GroupPoint& a, Sign sign);

/// Faithful 4x4 representation  [[1, w^T Omega R_c, 2 x1], [0, R_c, w], [0, 0, 1]].
Eigen::Matrix4d group_matrix(const GroupPoint& g, Sign sign);
/// exp of X = X1 e1 + X2 e2 + X3 e3 + X4 e4, through the representation.
GroupPoint group_exp(const Eigen::Vector4d& x, Sign sign);

/// exp(t e1 + u e2 + v e3) in closed form; Taylor branch for |v| < 1e-4.
GroupPoint exp_B(const LoopPoint& p, Sign sign);

/// Inverse of exp_B on the section. Throws std::domain_error if g is further
/// than tol from the section (measured by section_defect).
LoopPoint exp_inv(const GroupPoint& g, Sign sign, double tol = 1e-9);

/// x4 + u C(v) with u recovered from (x2, x3); zero exactly on the section.
double section_defect(const GroupPoint& g, Sign sign);

/// (exp(eps e_i) exp(eps e_j) exp(eps e_i)^-1 exp(eps e_j)^-1) / eps^2, which
/// tends to [e_i, e_j] as eps -> 0. Indices are 0-based.
Eigen::Vector4d commutator_estimate(int i, int j, double eps, Sign sign);

/// sin v / v, (1 - cos v)/v, (v - sin v)/v^2 and their hyperbolic analogues.
struct SectionKernels {
  double s, c, k;
};
SectionKernels section_kernels(double v, Sign sign);

}  // namespace bolalg
