#pragma once

#include "bolalg/loop.hpp"

// Literal closed-form expressions for this family of loops, kept as written
// (errors included). They are only used as a fast path to be compared against
// the Newton-based implementation.
// Ambiguous spots are resolved as noted next to each function.

namespace bolalg::closed_form {

/// Central term without rotation; circular rows read  x2 + y2 cos x3 - y4 sin x3.
GroupPoint group_compose(const GroupPoint& a, const GroupPoint& b, Sign sign);

/// (t + (v - sin v) u^2 / (2 v^2), (u/v) sin v, v, (u/v)(1 - cos v)); v != 0.
GroupPoint exp_B(const LoopPoint& p, Sign sign);

/// (x1 - x2^2 sin^2 x3 / (2 x3^3) + x2^2 sin^3 x3 / (2 x3^4), (x2/x3) sin x3, x3).
LoopPoint exp_inv(const GroupPoint& g, Sign sign);

/// The one-parameter set {(0, 0, alpha, alpha)} given for every chart.
GroupPoint h_curve(double alpha);

/// Case 1: the scalar v-relation solved by newton_root from v = x3.
/// Case 2: the A, B (resp. D, E) formulas, reading "x1 AB ..." as "x1 + AB ...".
/// Throws std::runtime_error if the scalar relation has no root near x3.
SectionSplit project_to_section(const GroupPoint& g, const LoopChart& chart);

/// Case 1: T (resp. P) relation and F_minus (resp. F_plus).
/// Case 2: A', B', C' (resp. D', E', F' with Lambda). The (A')^2 term in F' is
/// read as (D')^2.
LoopPoint loop_compose(const LoopPoint& a, const LoopPoint& b, const LoopChart& chart);

/// Residual of the case-1 T/P relation at T for the pair (a, b).
double t_relation(const LoopPoint& a, const LoopPoint& b, Sign sign, double T);

}  // namespace bolalg::closed_form
