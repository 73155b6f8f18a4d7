#include "bolalg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bolalg {

Eigen::MatrixXd mat_exp(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_exp: matrix not square");
  if (!a.allFinite()) throw std::domain_error("mat_exp: non-finite entry");
  const Eigen::Index n = a.rows();

  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);
  const double scaled_norm = norm / std::ldexp(1.0, squarings);

  // Each squaring can double the relative error; compensate in the target.
  const double target = tol / std::ldexp(1.0, squarings);
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  double term_bound = 1.0;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    term_bound *= scaled_norm / k;
    // geometric tail bound for the remaining terms
    const double tail = term_bound * scaled_norm / (k + 1) / (1.0 - scaled_norm / (k + 2));
    if (tail < target || term.isZero(0.0)) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

namespace {

RootResult bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
                  int iterations) {
  double flo = f(lo);
  if (std::abs(flo) < tol) return {lo, iterations, true};
  const double fhi = f(hi);
  if (std::abs(fhi) < tol) return {hi, iterations, true};
  if (std::signbit(flo) == std::signbit(fhi)) return {lo, iterations, false};
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    ++iterations;
    if (std::abs(fm) < tol) return {mid, iterations, true};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid)))
      break;
  }
  const double mid = 0.5 * (lo + hi);
  return {mid, iterations, std::abs(f(mid)) < tol};
}

}  // namespace

RootResult newton_root(const std::function<double(double)>& f,
                       const std::function<double(double)>& df, double x0,
                       const NewtonOptions& options) {
  double x = x0;
  int it = 0;
  auto fallback = [&]() -> RootResult {
    if (!options.bracket) return {x, it, false};
    return bisect(f, options.bracket->first, options.bracket->second, options.tol, it);
  };
  for (; it < options.max_iter; ++it) {
    const double fx = f(x);
    if (!std::isfinite(fx)) return fallback();
    if (std::abs(fx) < options.tol) return {x, it, true};
    const double d = df(x);
    if (!std::isfinite(d) || std::abs(d) < 1e-14) return fallback();
    x -= fx / d;
    if (options.bracket && (x < options.bracket->first || x > options.bracket->second))
      return fallback();
  }
  if (std::abs(f(x)) < options.tol) return {x, it, true};
  return fallback();
}

}  // namespace bolalg
