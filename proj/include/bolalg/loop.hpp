#pragma once

#include "bolalg/group.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bolalg {

enum class WebCase { case1, case2 };  // h = <e4 + e3>  or  h = <e4 + y e2>

/// Which coset the projection factors through. Only `left` gives a Bol loop;
/// `right` is the deliberately wrong variant used as a negative control.
enum class CosetSide { left, right };

struct LoopTolerances {
  double newton = 1e-15;  // on the max-norm of the decomposition residual
  int max_iter = 60;
  double section = 1e-9;
};

struct LoopChart {
  Sign sign = Sign::minus;
  WebCase web_case = WebCase::case1;
  double y = 0.0;
  double radius = 0.5;
  CosetSide side = CosetSide::left;
  LoopTolerances tol;

  /// "minus1", "minus2", "plus1" or "plus2"; y is used by the case-2 charts.
  static LoopChart parse(std::string_view name, double y = 0.0);
  std::string name() const;
  /// Direction of h in group coordinates.
  Eigen::Vector4d h_direction() const;
};

struct SectionSplit {
  GroupPoint section;  // on exp_B
  double alpha = 0.0;  // g = section * exp(alpha h)
  int iterations = 0;
};

/// Newton on the four unknowns (t, u, v, alpha) of exp_B(t,u,v) exp(alpha h) = g.
/// Throws std::runtime_error when the iteration does not converge.
SectionSplit project_to_section(const GroupPoint& g, const LoopChart& chart);

/// Same decomposition reduced to one scalar equation: the section defect of
/// g exp(-alpha h) vanishes.
SectionSplit project_to_section_scalar(const GroupPoint& g, const LoopChart& chart);

LoopPoint loop_compose(const LoopPoint& a, const LoopPoint& b, const LoopChart& chart);

/// || a(b(ac)) - (a(ba))c ||_inf
double check_left_bol(const LoopPoint& a, const LoopPoint& b, const LoopPoint& c,
                      const LoopChart& chart);

/// ((eps xi)(eps eta) - (eps eta)(eps xi)) / eps^2, without extrapolation.
LoopPoint tangent_difference(const LoopChart& chart, const LoopPoint& xi, const LoopPoint& eta,
                             double eps);
/// Richardson combination 2 D(eps/2) - D(eps) of tangent_difference.
LoopPoint tangent_bilinear(const LoopChart& chart, const LoopPoint& xi, const LoopPoint& eta,
                           double eps);

/// The exact product on B that the chart should reproduce, as a 3x3x3 table
/// evaluated on vectors.
LoopPoint exact_bilinear(const LoopChart& chart, const LoopPoint& xi, const LoopPoint& eta);

struct WebRow {
  LoopPoint a, b, ab;
};

struct WebGrid {
  int points_per_axis = 3;
  double radius = 0.2;
};

/// Every pair (a, b) of lattice points in [-r, r]^3 with a as the outer loop.
std::vector<WebRow> sample_web(const LoopChart& chart, const WebGrid& grid);
void write_web_csv(const std::vector<WebRow>& rows, std::ostream& out);

struct BolStatistics {
  int samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double median_residual = 0.0;
};

/// Random triples with max-norm at most `radius`, seeded; work is split over
/// `threads` workers but the result does not depend on the split.
BolStatistics bol_statistics(const LoopChart& chart, int samples, std::uint64_t seed,
                             double radius = 0.1, int threads = 1);

}  // namespace bolalg
