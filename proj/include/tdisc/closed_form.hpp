#pragma once

#include "tdisc/design.hpp"

#include <vector>

namespace tdisc {

/// n tan^2(pi / 2n): the largest |b| for which the explicit designs apply.
[[nodiscard]] double critical_b(int n);

/// t_i(b) = -(1 + |b|/n) cos(i pi/n) - |b|/n for i = 1..n, increasing,
/// with t_n = 1. Throws RegimeError for |b| > critical_b(n).
[[nodiscard]] std::vector<double> support_points(int n, double b);

/// w_i = (2/n) sin^2(i pi/2n), w_(n-i) = (2/n) cos^2(i pi/2n) for
/// i = 1..floor(n/2), and w_n = 1/n.
[[nodiscard]] std::vector<double> canonical_weights(int n);

struct ClosedFormDesign {
    enum class Regime { zero_b_family, positive_b, negative_b };

    Design design;
    Regime regime;
    int n;
    double b;
    double alpha = 0.0;  // mixing parameter, meaningful for zero_b_family only
};

/// Unique T-optimal design for 0 < |b| <= critical_b(n). For b < 0 the
/// design for |b| is reflected. b == 0 throws ArgumentError pointing to
/// zero_b_family (the optimum is not unique there).
[[nodiscard]] ClosedFormDesign t_optimal_design(int n, double b);

/// (1 - alpha) xi_1 + alpha xi_2 for b = 0, where xi_1 sits on
/// t_1(0)..t_n(0) and xi_2 is its reflection. Coincident points are merged.
[[nodiscard]] ClosedFormDesign zero_b_family(int n, double alpha);

}  // namespace tdisc
