#pragma once

#include "bolalg/enveloping.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bolalg {

/// Upper-triangular automorphism of the Type V trilinear system:
///   [[eps b^2, eps*sigma f b, d], [0, b, f], [0, 0, eps]]
struct AutoParams {
  Rational b = 1;
  Rational f = 0;
  Rational d = 0;
  int eps = 1;

  bool operator==(const AutoParams&) const = default;
};

MatQ auto_matrix(const AutoParams& p, Sign sign);
/// Same matrix with the (1,2) entry taken as f*b for either eps.
MatQ auto_matrix_literal(const AutoParams& p);
/// auto_matrix on B, e4 -> eps*b*e4.
MatQ extend_to_G(const AutoParams& p, Sign sign);
SubalgebraParams action_on_params(const AutoParams& p, const SubalgebraParams& s);
/// x' = (x b^2 + eps y f b + eps z d)/b, y' = eps (y b + z f)/b, z' = z/b.
SubalgebraParams action_on_params_literal(const AutoParams& p, const SubalgebraParams& s);

enum class ClassKind {
  iso_z,            // (0,0,1)
  iso_yfamily,      // (0,y,0), y >= 0; y = 0 is the trivial product
  iso_xcase,        // (1,0,0)
  isotopy_e3,       // e2.e3 = -e3
  isotopy_e2,       // e2.e3 = -e2 (minus) or +e2 (plus)
  isotopy_e1e2,     // e2.e3 = -e1 - e2 (minus only)
  isotopy_trivial,  // zero product
};

struct ClassLabel {
  ClassKind kind = ClassKind::iso_yfamily;
  Sign sign = Sign::minus;
  Rational parameter = 0;  // y for the y-family

  bool operator==(const ClassLabel&) const = default;
  std::string name() const;
};

/// Parameters (x,y,z) of the representative named by a label.
SubalgebraParams representative(const ClassLabel& label);
/// Labels listed for the isotopy classification of a sign, in listing order.
std::vector<ClassLabel> isotopy_representatives(Sign sign);

struct IsoResult {
  ClassLabel label;
  AutoParams witness;  // action_on_params(witness, s) == representative(label)
};

IsoResult canonical_form_iso(const SubalgebraParams& s);

/// Solves the morphism equations for g in the automorphism group with
/// action_on_params(g, from) == to. Empty when no such element exists.
std::optional<AutoParams> solve_iso_witness(const SubalgebraParams& from,
                                            const SubalgebraParams& to);

// ---------------------------------------------------------------------------
// isotopy, in floating point

struct ParamsD {
  Sign sign = Sign::minus;
  double x = 0, y = 0, z = 0;
};

ParamsD to_double(const SubalgebraParams& s);
ParamsD action_on_params(const AutoParams& p, const ParamsD& s);

/// The transformed line left the chart {e4 coefficient != 0}.
class ChartError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ad(u e1 + v e2 + p e3) in g4(sign), from the structure constants.
template <class Scalar>
Mat<Scalar> ad_matrix(const Vec<Scalar>& xi, Sign sign) {
  if (xi.size() != 3) throw std::invalid_argument("ad_matrix: xi must lie in B = <e1,e2,e3>");
  const LieAlgebra g = g4(sign);
  Mat<Scalar> m = Mat<Scalar>::Zero(4, 4);
  for (const auto& [idx, c] : g.bracket.entries()) {
    if (idx[0] > 2) continue;
    Scalar coeff;
    if constexpr (std::is_same_v<Scalar, Rational>)
      coeff = c;
    else
      coeff = static_cast<Scalar>(to_double(c));
    m(idx[2], idx[1]) += coeff * xi(idx[0]);
  }
  return m;
}

Eigen::Matrix4d Ad(const Eigen::Vector3d& xi, Sign sign);
Eigen::Matrix4d ad_matrix_literal(const Eigen::Vector3d& xi);
/// Literal closed-form matrix; requires |p| > 0.
Eigen::Matrix4d Ad_literal(const Eigen::Vector3d& xi);

/// Direction of Ad(exp xi)(e4 + x e1 + y e2 + z e3), renormalised so that the
/// e4 coefficient is 1. Throws ChartError when that coefficient is below 1e-8
/// relative to the vector's norm.
ParamsD isotopy_transform(const Eigen::Vector3d& xi, const ParamsD& s);
ParamsD apply_lie_automorphism(const Eigen::Matrix4d& phi, const ParamsD& s);

/// Literal closed form of (x', y') for h = <e4 + y e2>, xi = (u, v, p), p != 0.
std::pair<double, double> isotopy_transform_literal(const Eigen::Vector3d& xi, double y);

/// p with y = sinh p / (cosh p - 1); only |y| > 1 admits a real solution.
std::optional<double> solve_isotopy_p(double y);

/// e1 -> -e1, e2 <-> e4, e3 -> e3: an automorphism of g4(minus) that does not
/// preserve B. Inverts y for z = 0.
MatQ swap_automorphism();

ClassLabel canonical_form_isotopy(const SubalgebraParams& s);

struct FloatIsoClass {
  ClassKind kind;
  double parameter;  // |y| for the y-family
};
FloatIsoClass classify_iso(const ParamsD& s, double tol = 1e-8);

struct OrbitGrid {
  std::vector<double> p_values;
  std::vector<double> v_values;
  std::vector<AutoParams> autos;
  bool use_swap = true;
  double tol = 1e-8;
};

OrbitGrid default_orbit_grid();

/// Isotopy representatives reachable from s: Ad(exp xi) applied after an
/// element of the automorphism group (and the swap for minus), over the grid,
/// with local root refinement in p so that exact targets can be hit.
std::set<ClassKind> orbit_search(const ParamsD& s, const OrbitGrid& grid);

std::string to_string(ClassKind kind, Sign sign);

}  // namespace bolalg
