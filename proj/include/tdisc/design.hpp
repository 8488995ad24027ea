#pragma once

#include "tdisc/polynomial.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace tdisc {

/// Finitely supported probability measure on [-1, 1].
///
/// Construction validates the invariants: equal-length non-empty inputs,
/// points strictly increasing and inside [-1, 1] (within kTolerance; larger
/// excursions are rejected, never clamped), weights positive and summing to 1
/// within kTolerance.
class Design {
public:
    static constexpr double kTolerance = 1e-12;

    Design(std::vector<double> points, std::vector<double> weights);

    [[nodiscard]] const std::vector<double>& points() const noexcept { return points_; }
    [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

    /// Image under x -> -x, with weights carried along and order restored.
    [[nodiscard]] Design reflected() const;

    friend bool operator==(const Design&, const Design&) = default;

private:
    std::vector<double> points_;
    std::vector<double> weights_;
};

/// The rival pair "degree n" versus "degree n-2".
///
/// With the b parameterization the deviation term is
/// scale * (x^n + b x^(n-1)) where scale is the x^n coefficient;
/// with bbar it is scale * (x^(n-1) + bbar x^n) where scale is the
/// x^(n-1) coefficient. Exactly one parameterization is active.
class DiscriminationProblem {
public:
    enum class Ratio { b, bbar };

    static DiscriminationProblem with_b(int n, double b, double scale = 1.0);
    static DiscriminationProblem with_bbar(int n, double bbar, double scale = 1.0);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] Ratio active() const noexcept { return active_; }
    [[nodiscard]] double ratio() const noexcept { return ratio_; }
    [[nodiscard]] double scale() const noexcept { return scale_; }

    /// Number of parameters of the larger model, n + 1.
    [[nodiscard]] int larger_dim() const noexcept { return n_ + 1; }
    /// Number of parameters of the smaller model, n - 1.
    [[nodiscard]] int smaller_dim() const noexcept { return n_ - 1; }

    /// The two leading terms that the smaller model cannot absorb.
    [[nodiscard]] Polynomial deviation_term() const;

private:
    DiscriminationProblem(int n, Ratio active, double ratio, double scale);

    int n_;
    Ratio active_;
    double ratio_;
    double scale_;
};

/// (n+1)x(n+1) matrix with entry (j,k) = sum_i w_i x_i^(j+k).
using MomentMatrix = Eigen::MatrixXd;

[[nodiscard]] MomentMatrix moment_matrix(const Design& d, int n);

/// Best weighted-L2 fit, under d, of the problem's deviation term by
/// polynomials of degree <= n-2. Minimum-norm coefficients when the
/// normal equations are singular.
[[nodiscard]] Polynomial best_l2_coefficients(const Design& d, const DiscriminationProblem& prob);

/// T-criterion: min over the smaller model of the weighted squared deviation.
[[nodiscard]] double t_criterion(const Design& d, const DiscriminationProblem& prob);

/// Minimum-norm least-squares solve of a symmetric PSD system using an
/// eigenvalue-thresholded pseudo-inverse (threshold rel_tol * ||A||).
[[nodiscard]] Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs,
                                         double rel_tol = 1e-10);

}  // namespace tdisc
