#pragma once

#include "tdisc/polynomial.hpp"

#include <vector>

namespace tdisc {

/// Best uniform approximation of x^n + b x^(n-1) on [-1, 1] from
/// polynomials of degree <= n-2.
struct BestApproxResult {
    int n = 0;
    double b = 0.0;
    Polynomial approximant;          // degree <= n-2
    double deviation = 0.0;          // sup |x^n + b x^(n-1) - approximant|
    std::vector<double> extremal_points;
    std::vector<int> signs;          // sign of the error at each extremal point
    int iterations = 0;

    /// x^n + b x^(n-1) - approximant.
    [[nodiscard]] Polynomial error_polynomial() const;
};

/// Unchecked shifted-Chebyshev form c_n T_n((-x - b/n)/(1 + b/n)),
/// c_n = (-1)^n 2^(1-n) (1 + b/n)^n, for b >= 0. Negative b is handled by
/// reflection, (-1)^n psi_|b|(-x). Monic with x^(n-1) coefficient b.
/// Only minimax for |b| <= critical_b(n).
[[nodiscard]] Polynomial shifted_chebyshev_psi(int n, double b);

/// Minimax error polynomial in closed form. Throws RegimeError when
/// |b| > n tan^2(pi/2n); use remez() there.
[[nodiscard]] Polynomial closed_form_psi(int n, double b);

/// sup over [-1, 1] of |p|, from the stationary points of p and the endpoints.
[[nodiscard]] double sup_abs(const Polynomial& p);

/// Points of [-1, 1] where |psi| >= (1 - tol) sup |psi|, one per local
/// maximum (clustering radius 1e-7), endpoints included when they qualify.
[[nodiscard]] std::vector<double> extremal_set(const Polynomial& psi, double tol);

struct RemezOptions {
    int max_iterations = 100;
};

/// Second Remez algorithm with full reference exchange, started from the
/// degree-n Chebyshev extrema with the endpoint on the side of -sign(b)
/// dropped. Throws SolverError carrying the last iterate's state in the
/// message if equioscillation is not reached within max_iterations.
[[nodiscard]] BestApproxResult remez(int n, double b, double tol, RemezOptions opts = {});

}  // namespace tdisc
