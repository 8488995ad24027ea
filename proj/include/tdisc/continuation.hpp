#pragma once

#include "tdisc/design.hpp"
#include "tdisc/polynomial.hpp"

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

namespace tdisc {

/// Unknowns of the stationarity system for the problem written in
/// bbar = 1/b: theta = (q, t_2..t_{n-1}, w_1..w_{n-1}), 3n-4 entries.
///
/// The design template is fixed at the endpoints, {-1, t_2, .., t_{n-1}, 1},
/// and w_n = 1 - sum(w_1..w_{n-1}). The error polynomial is
/// psi(x) = sum_j q_j x^j + x^(n-1) + bbar x^n.
struct ContinuationState {
    std::vector<double> q;         // n-1 coefficients of the smaller-model fit
    std::vector<double> interior;  // n-2 interior support points
    std::vector<double> weights;   // w_1..w_{n-1}
    double bbar = 0.0;

    [[nodiscard]] int n() const noexcept { return static_cast<int>(q.size()) + 1; }
    [[nodiscard]] std::size_t dim() const noexcept { return q.size() + interior.size() + weights.size(); }

    /// Interior points strictly ordered in (-1, 1), all n weights positive.
    [[nodiscard]] bool valid() const noexcept;

    [[nodiscard]] Design design() const;
    [[nodiscard]] Polynomial psi() const;

    [[nodiscard]] Eigen::VectorXd theta() const;
    static ContinuationState from_theta(int n, const Eigen::VectorXd& theta, double bbar);
};

/// (1/n) cot^2(pi/2n) = 1 / critical_b(n): the largest |bbar| handled here.
[[nodiscard]] double bbar_limit(int n);

/// State at bbar = 0: the D1-optimal design for degree n-1 versus n-2,
/// masses 1/(2(n-1)) at +-1 and 1/(n-1) at cos(k pi/(n-1)), with q taken
/// from psi = 2^-(n-2) T_{n-1}. Requires n >= 2.
[[nodiscard]] ContinuationState d1_optimal_start(int n);

/// H = d_q' M(xi) d_q = sum_i w_i psi(t_i)^2.
[[nodiscard]] double h_form(const ContinuationState& s);

/// Gradient of H with respect to theta.
[[nodiscard]] Eigen::VectorXd stationarity_residual(const ContinuationState& s);

/// Hessian of H with respect to theta (the Jacobian of the residual), analytic.
[[nodiscard]] Eigen::MatrixXd stationarity_jacobian(const ContinuationState& s);

/// Partial derivative of the residual with respect to bbar at fixed theta.
[[nodiscard]] Eigen::VectorXd stationarity_bbar_derivative(const ContinuationState& s);

struct ContinuationOptions {
    double step = 0.05;
    double min_step = 1e-6;
    int max_newton = 30;
    double inequality_tol = 1e-8;
};

/// T-optimal state at bbar, reached by first-order Taylor prediction and
/// Newton correction from the bbar = 0 anchor. The result satisfies
/// |residual|_inf <= tol and the global inequality psi^2 <= H on [-1, 1]
/// within opts.inequality_tol (SolverError otherwise).
[[nodiscard]] ContinuationState solve_at(int n, double bbar, double tol,
                                         const ContinuationOptions& opts = {});

/// Continue from an already converged state to a new bbar.
[[nodiscard]] ContinuationState continue_to(const ContinuationState& from, double bbar, double tol,
                                            const ContinuationOptions& opts = {});

struct TrajectoryPoint {
    double bbar;
    Design design;
    double criterion;  // H at the optimum
};

/// Optimal designs over a sorted grid of bbar values, each segment marched
/// outward from the anchor at 0.
[[nodiscard]] std::vector<TrajectoryPoint> trajectory(int n, std::span<const double> grid,
                                                      double tol = 1e-10,
                                                      const ContinuationOptions& opts = {});

/// CSV with header bbar,t_1..t_n,w_1..w_n,criterion (17 significant digits, LF).
[[nodiscard]] std::string trajectory_csv(const std::vector<TrajectoryPoint>& traj);

/// Taylor coefficients theta(j, bbar0), j = 1..order (order <= 3), of the
/// optimal path. Order 1 is -J^-1 dg/dbbar; higher orders follow the
/// recursion theta(s+1) = -J^-1 (d/dbbar)^(s+1) g(theta_(s)(bbar), bbar)/(s+1)!
/// with the total derivative taken by Richardson-extrapolated central
/// differences. Intended for validating the path follower.
[[nodiscard]] std::vector<Eigen::VectorXd> taylor_coefficients(const ContinuationState& at, int order);

}  // namespace tdisc
