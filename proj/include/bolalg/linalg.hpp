#pragma once

#include "bolalg/scalar.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

namespace bolalg {

/// Gauss-Jordan elimination. Exact for Rational; for floating types the
/// pivot is the largest entry and only an exactly zero pivot counts as singular.
/// Returns std::nullopt when A is singular.
template <class Scalar>
std::optional<Vec<Scalar>> solve_linear(Mat<Scalar> a, Vec<Scalar> b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_linear: matrix not square");
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      if constexpr (std::is_floating_point_v<Scalar>) {
        if (pivot < 0 || std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
      } else {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      std::swap(b(col), b(pivot));
    }
    const Scalar p = a(col, col);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const Scalar factor = a(r, col) / p;
      a.row(r) -= factor * a.row(col);
      b(r) -= factor * b(col);
    }
  }
  Vec<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = b(i) / a(i, i);
  return x;
}

/// Rank by exact row reduction.
template <class Scalar>
int rank(Mat<Scalar> a) {
  int r = 0;
  for (Eigen::Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(r).swap(a.row(pivot));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, col))) continue;
      const Scalar factor = a(i, col) / a(r, col);
      a.row(i) -= factor * a.row(r);
    }
    ++r;
  }
  return r;
}

/// Scaling and squaring around a truncated Taylor series. The degree is raised
/// until the tail bound drops below tol (at most 30 terms after scaling to norm 1/2).
/// Throws std::domain_error on non-finite input.
Eigen::MatrixXd mat_exp(const Eigen::MatrixXd& a, double tol = 1e-13);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
  std::optional<std::pair<double, double>> bracket;  // used by the bisection fallback
};

struct RootResult {
  double x = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Newton iteration on f with derivative df, stopping when |f(x)| < tol.
/// A derivative below 1e-14 in magnitude, a step leaving the bracket, or running
/// out of iterations switches to bisection if a sign-changing bracket was given.
RootResult newton_root(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double x0,
                       const NewtonOptions& options = {});

}  // namespace bolalg
