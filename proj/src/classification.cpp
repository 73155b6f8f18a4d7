#include "bolalg/classification.hpp"

#include <algorithm>
#include <cmath>

namespace bolalg {

namespace {

void require_b(const AutoParams& p) {
  if (is_zero(p.b)) throw std::invalid_argument("automorphism parameter b must be nonzero");
  if (p.eps != 1 && p.eps != -1) throw std::invalid_argument("eps must be +1 or -1");
}

}  // namespace

MatQ auto_matrix(const AutoParams& p, Sign sign) {
  require_b(p);
  MatQ a = MatQ::Zero(3, 3);
  a(0, 0) = p.eps * p.b * p.b;
  a(0, 1) = p.eps * sigma(sign) * p.f * p.b;
  a(0, 2) = p.d;
  a(1, 1) = p.b;
  a(1, 2) = p.f;
  a(2, 2) = p.eps;
  return a;
}

MatQ auto_matrix_literal(const AutoParams& p) {
  require_b(p);
  MatQ a = MatQ::Zero(3, 3);
  a(0, 0) = p.eps * p.b * p.b;
  a(0, 1) = p.f * p.b;
  a(0, 2) = p.d;
  a(1, 1) = p.b;
  a(1, 2) = p.f;
  a(2, 2) = p.eps;
  return a;
}

MatQ extend_to_G(const AutoParams& p, Sign sign) {
  MatQ a = MatQ::Zero(4, 4);
  a.topLeftCorner(3, 3) = auto_matrix(p, sign);
  a(3, 3) = p.eps * p.b;
  return a;
}

SubalgebraParams action_on_params(const AutoParams& p, const SubalgebraParams& s) {
  require_b(p);
  const int sg = sigma(s.sign);
  SubalgebraParams out{s.sign, 0, 0, 0};
  out.x = (s.x * p.b * p.b + sg * s.y * p.f * p.b + p.eps * s.z * p.d) / p.b;
  out.y = p.eps * (s.y * p.b + s.z * p.f) / p.b;
  out.z = s.z / p.b;
  return out;
}

SubalgebraParams action_on_params_literal(const AutoParams& p, const SubalgebraParams& s) {
  require_b(p);
  SubalgebraParams out{s.sign, 0, 0, 0};
  out.x = (s.x * p.b * p.b + p.eps * s.y * p.f * p.b + p.eps * s.z * p.d) / p.b;
  out.y = p.eps * (s.y * p.b + s.z * p.f) / p.b;
  out.z = s.z / p.b;
  return out;
}

std::string to_string(ClassKind kind, Sign sign) {
  switch (kind) {
    case ClassKind::iso_z: return "(0,0,1)";
    case ClassKind::iso_yfamily: return "(0,y,0)";
    case ClassKind::iso_xcase: return "(1,0,0)";
    case ClassKind::isotopy_e3: return "-e3";
    case ClassKind::isotopy_e2: return sign == Sign::minus ? "-e2" : "+e2";
    case ClassKind::isotopy_e1e2: return "-e1-e2";
    case ClassKind::isotopy_trivial: return "trivial";
  }
  return "?";
}

std::string ClassLabel::name() const {
  if (kind == ClassKind::iso_yfamily) return "(0," + format_rational(parameter) + ",0)";
  return to_string(kind, sign);
}

SubalgebraParams representative(const ClassLabel& label) {
  SubalgebraParams s{label.sign, 0, 0, 0};
  switch (label.kind) {
    case ClassKind::iso_z:
    case ClassKind::isotopy_e3: s.z = 1; break;
    case ClassKind::iso_yfamily: s.y = label.parameter; break;
    case ClassKind::iso_xcase: s.x = 1; break;
    case ClassKind::isotopy_e2: s.y = label.sign == Sign::minus ? 1 : -1; break;
    case ClassKind::isotopy_e1e2:
      s.x = 1;
      s.y = 1;
      break;
    case ClassKind::isotopy_trivial: break;
  }
  return s;
}

std::vector<ClassLabel> isotopy_representatives(Sign sign) {
  if (sign == Sign::minus)
    return {{ClassKind::isotopy_e3, sign, 0},
            {ClassKind::isotopy_e2, sign, 0},
            {ClassKind::isotopy_e1e2, sign, 0},
            {ClassKind::isotopy_trivial, sign, 0}};
  return {{ClassKind::isotopy_e3, sign, 0},
          {ClassKind::isotopy_e2, sign, 0},
          {ClassKind::isotopy_trivial, sign, 0}};
}

IsoResult canonical_form_iso(const SubalgebraParams& s) {
  const int sg = sigma(s.sign);
  IsoResult r;
  r.label.sign = s.sign;
  if (!is_zero(s.z)) {
    r.label.kind = ClassKind::iso_z;
    r.witness.eps = sg;
    r.witness.b = s.z;
    r.witness.f = -s.y;
    r.witness.d = -sg * (s.x * s.z - sg * s.y * s.y);
  } else if (!is_zero(s.y)) {
    r.label.kind = ClassKind::iso_yfamily;
    r.label.parameter = abs(s.y);
    r.witness.eps = s.y > 0 ? 1 : -1;
    r.witness.f = -sg * s.x / s.y;
  } else if (!is_zero(s.x)) {
    r.label.kind = ClassKind::iso_xcase;
    r.witness.b = 1 / s.x;
  } else {
    r.label.kind = ClassKind::iso_yfamily;
  }
  return r;
}

std::optional<AutoParams> solve_iso_witness(const SubalgebraParams& from,
                                            const SubalgebraParams& to) {
  if (from.sign != to.sign) return std::nullopt;
  const int sg = sigma(from.sign);
  // z' = z/b fixes b whenever z != 0; otherwise b stays free and z' must vanish.
  if (!is_zero(from.z)) {
    if (is_zero(to.z)) return std::nullopt;
    AutoParams p;
    p.b = from.z / to.z;
    p.eps = sg;
    // y' = eps (y b + z f)/b  and  x' = (x b^2 + sigma y f b + eps z d)/b, both linear.
    p.f = (p.eps * to.y * p.b - from.y * p.b) / from.z;
    p.d = p.eps * (to.x * p.b - from.x * p.b * p.b - sg * from.y * p.f * p.b) / from.z;
    return p;
  }
  if (!is_zero(to.z)) return std::nullopt;
  for (int eps : {1, -1}) {
    if (to.y != eps * from.y) continue;
    AutoParams p;
    p.eps = eps;
    if (!is_zero(from.y)) {
      // x' = x b + sigma y f: choose b = 1 and solve for f
      p.f = sg * (to.x - from.x) / from.y;
      return p;
    }
    if (is_zero(from.x)) {
      if (!is_zero(to.x)) continue;
      return p;
    }
    if (is_zero(to.x)) continue;
    p.b = to.x / from.x;
    return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ParamsD to_double(const SubalgebraParams& s) {
  return {s.sign, to_double(s.x), to_double(s.y), to_double(s.z)};
}

ParamsD action_on_params(const AutoParams& p, const ParamsD& s) {
  require_b(p);
  const double b = to_double(p.b), f = to_double(p.f), d = to_double(p.d);
  const int sg = sigma(s.sign);
  return {s.sign, (s.x * b * b + sg * s.y * f * b + p.eps * s.z * d) / b,
          p.eps * (s.y * b + s.z * f) / b, s.z / b};
}

Eigen::Matrix4d Ad(const Eigen::Vector3d& xi, Sign sign) {
  return mat_exp(ad_matrix<double>(Vec<double>(xi), sign));
}

Eigen::Matrix4d ad_matrix_literal(const Eigen::Vector3d& xi) {
  const double v = xi(1), p = xi(2);
  Eigen::Matrix4d m;
  m << 0, 0, 0, -v,
       0, 0, 0, -p,
       0, 0, 0, 0,
       0, -p, v, 0;
  return m;
}

Eigen::Matrix4d Ad_literal(const Eigen::Vector3d& xi) {
  const double v = xi(1), p = xi(2);
  const double ch = std::cosh(p), sh = std::sinh(p);
  Eigen::Matrix4d m;
  m << 1, v * (ch - 1) / p, -(ch - 1) * v * v / (p * p), -v * sh / p,
       0, ch, v * (ch - 1) / p, -sh,
       0, 0, 1, 0,
       0, -sh, v * sh / p, ch;
  return m;
}

namespace {

ParamsD renormalise(const Eigen::Vector4d& w, Sign sign) {
  if (std::abs(w(3)) < 1e-8 * w.norm())
    throw ChartError("transformed subalgebra has no e4 component");
  return {sign, w(0) / w(3), w(1) / w(3), w(2) / w(3)};
}

Eigen::Vector4d direction(const ParamsD& s) { return {s.x, s.y, s.z, 1.0}; }

}  // namespace

ParamsD isotopy_transform(const Eigen::Vector3d& xi, const ParamsD& s) {
  return renormalise(Ad(xi, s.sign) * direction(s), s.sign);
}

ParamsD apply_lie_automorphism(const Eigen::Matrix4d& phi, const ParamsD& s) {
  return renormalise(phi * direction(s), s.sign);
}

std::pair<double, double> isotopy_transform_literal(const Eigen::Vector3d& xi, double y) {
  const double v = xi(1), p = xi(2);
  const double ch = std::cosh(p), sh = std::sinh(p);
  const double den = ch - y * sh;
  return {v / p * (y * (ch - 1) - sh) / den, (y * ch - sh) / den};
}

std::optional<double> solve_isotopy_p(double y) {
  // sinh p / (cosh p - 1) = coth(p/2)
  if (!(std::abs(y) > 1)) return std::nullopt;
  return 2 * std::atanh(1 / y);
}

MatQ swap_automorphism() {
  MatQ t = MatQ::Zero(4, 4);
  t(0, 0) = -1;
  t(3, 1) = 1;
  t(2, 2) = 1;
  t(1, 3) = 1;
  return t;
}

ClassLabel canonical_form_isotopy(const SubalgebraParams& s) {
  ClassLabel label;
  label.sign = s.sign;
  if (!is_zero(s.z)) {
    label.kind = ClassKind::isotopy_e3;
  } else if (s.sign == Sign::minus) {
    // boosts preserve the sign of y^2 - 1; the swap trades y for 1/y
    if (s.y * s.y == 1)
      label.kind = is_zero(s.x) ? ClassKind::isotopy_e2 : ClassKind::isotopy_e1e2;
    else
      label.kind = ClassKind::isotopy_trivial;
  } else {
    label.kind = is_zero(s.y) ? ClassKind::isotopy_trivial : ClassKind::isotopy_e2;
  }
  return label;
}

FloatIsoClass classify_iso(const ParamsD& s, double tol) {
  const double n = std::sqrt(s.x * s.x + s.y * s.y + s.z * s.z + 1.0);
  if (std::abs(s.z) / n >= tol) return {ClassKind::iso_z, 0.0};
  if (std::abs(s.y) / n >= tol) return {ClassKind::iso_yfamily, std::abs(s.y)};
  if (std::abs(s.x) / n >= tol) return {ClassKind::iso_xcase, 0.0};
  return {ClassKind::iso_yfamily, 0.0};
}

OrbitGrid default_orbit_grid() {
  OrbitGrid g;
  for (int i = -60; i <= 60; ++i) g.p_values.push_back(0.05 * i);
  g.v_values = {-1.5, -0.5, 0.0, 0.75, 2.0};
  g.autos = {AutoParams{},
             AutoParams{Rational(2), 0, 0, 1},
             AutoParams{Rational(-1), 0, 0, 1},
             AutoParams{Rational(1), Rational(1), 0, -1},
             AutoParams{Rational(1, 2), Rational(-1), Rational(1), 1},
             AutoParams{Rational(3), Rational(0), Rational(-2), -1}};
  return g;
}

namespace {

// Representatives whose isomorphism class is the class of s.
void collect_labels(const ParamsD& s, double tol, std::set<ClassKind>& out) {
  const FloatIsoClass c = classify_iso(s, tol);
  const double n = std::sqrt(s.x * s.x + s.y * s.y + s.z * s.z + 1.0);
  switch (c.kind) {
    case ClassKind::iso_z: out.insert(ClassKind::isotopy_e3); break;
    case ClassKind::iso_yfamily:
      if (c.parameter / n < tol) {
        out.insert(ClassKind::isotopy_trivial);
      } else if (std::abs(c.parameter - 1.0) / n < tol) {
        out.insert(ClassKind::isotopy_e2);
        if (s.sign == Sign::minus) out.insert(ClassKind::isotopy_e1e2);
      }
      break;
    default: break;
  }
}

struct Evaluated {
  ParamsD image;
  bool ok;
};

Evaluated try_transform(const Eigen::Vector3d& xi, const ParamsD& s) {
  try {
    return {isotopy_transform(xi, s), true};
  } catch (const ChartError&) {
    return {s, false};
  }
}

// Hits y' = target exactly (up to root tolerance) by refining sign changes
// along the p grid, then clears x' with the affine dependence on v.
void refine_targets(const ParamsD& s, const OrbitGrid& grid, std::set<ClassKind>& out) {
  auto y_of = [&](double p) {
    const Evaluated e = try_transform(Eigen::Vector3d(0, 0, p), s);
    return e.ok ? e.image.y : std::nan("");
  };
  for (double target : {0.0, 1.0, -1.0}) {
    auto f = [&](double p) { return y_of(p) - target; };
    auto df = [&](double p) { return (f(p + 1e-6) - f(p - 1e-6)) / 2e-6; };
    for (std::size_t i = 0; i + 1 < grid.p_values.size(); ++i) {
      const double a = grid.p_values[i], b = grid.p_values[i + 1];
      const double fa = f(a), fb = f(b);
      if (!std::isfinite(fa) || !std::isfinite(fb) || (fa > 0) == (fb > 0)) continue;
      NewtonOptions opts;
      opts.tol = 1e-13;
      opts.bracket = std::make_pair(a, b);
      const RootResult root = newton_root(f, df, 0.5 * (a + b), opts);
      if (!root.converged) continue;
      double v = 0.0;
      if (target == 0.0) {
        const Evaluated e0 = try_transform(Eigen::Vector3d(0, 0, root.x), s);
        const Evaluated e1 = try_transform(Eigen::Vector3d(0, 1, root.x), s);
        if (!e0.ok || !e1.ok) continue;
        const double slope = e1.image.x - e0.image.x;
        if (std::abs(slope) > 1e-12) v = -e0.image.x / slope;
      }
      const Evaluated e = try_transform(Eigen::Vector3d(0, v, root.x), s);
      if (e.ok) collect_labels(e.image, grid.tol, out);
    }
  }
}

}  // namespace

std::set<ClassKind> orbit_search(const ParamsD& s, const OrbitGrid& grid) {
  std::vector<ParamsD> starts;
  const std::vector<AutoParams> autos = grid.autos.empty() ? std::vector<AutoParams>{AutoParams{}}
                                                           : grid.autos;
  const Eigen::Matrix4d swap = to_double(swap_automorphism());
  for (const AutoParams& a : autos) {
    const ParamsD moved = action_on_params(a, s);
    starts.push_back(moved);
    if (grid.use_swap && s.sign == Sign::minus) {
      try {
        starts.push_back(apply_lie_automorphism(swap, moved));
      } catch (const ChartError&) {
      }
    }
  }

  std::vector<Eigen::Matrix4d> ads;
  for (double p : grid.p_values)
    for (double v : grid.v_values) ads.push_back(Ad(Eigen::Vector3d(0, v, p), s.sign));

  std::set<ClassKind> labels;
  for (const ParamsD& start : starts) {
    for (const Eigen::Matrix4d& m : ads) {
      try {
        collect_labels(apply_lie_automorphism(m, start), grid.tol, labels);
      } catch (const ChartError&) {
      }
    }
    const double n = std::sqrt(start.x * start.x + start.y * start.y + start.z * start.z + 1.0);
    if (std::abs(start.z) / n < grid.tol) refine_targets(start, grid, labels);
  }
  return labels;
}

}  // namespace bolalg
