#include "tdisc/design.hpp"

#include "tdisc/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace tdisc {

Design::Design(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.empty()) throw ArgumentError("design: empty support");
    if (points_.size() != weights_.size())
        throw ArgumentError("design: points and weights differ in length");
    double total = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double x = points_[i];
        if (!std::isfinite(x) || std::abs(x) > 1.0 + kTolerance)
            throw ArgumentError("design: point " + std::to_string(x) + " outside [-1, 1]");
        if (i > 0 && !(x > points_[i - 1]))
            throw ArgumentError("design: points must be strictly increasing");
        if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
            throw ArgumentError("design: weights must be positive");
        total += weights_[i];
    }
    if (std::abs(total - 1.0) > kTolerance)
        throw ArgumentError("design: weights sum to " + std::to_string(total) + ", not 1");
}

Design Design::reflected() const {
    std::vector<double> p(points_.rbegin(), points_.rend());
    std::vector<double> w(weights_.rbegin(), weights_.rend());
    for (auto& x : p) x = -x;
    return Design(std::move(p), std::move(w));
}

DiscriminationProblem::DiscriminationProblem(int n, Ratio active, double ratio, double scale)
    : n_(n), active_(active), ratio_(ratio), scale_(scale) {
    if (n < 2) throw ArgumentError("discrimination problem: n must be >= 2");
    if (!std::isfinite(ratio)) throw ArgumentError("discrimination problem: ratio must be finite");
    if (!std::isfinite(scale)) throw ArgumentError("discrimination problem: scale must be finite");
}

DiscriminationProblem DiscriminationProblem::with_b(int n, double b, double scale) {
    return {n, Ratio::b, b, scale};
}

DiscriminationProblem DiscriminationProblem::with_bbar(int n, double bbar, double scale) {
    return {n, Ratio::bbar, bbar, scale};
}

Polynomial DiscriminationProblem::deviation_term() const {
    std::vector<double> c(static_cast<std::size_t>(n_) + 1, 0.0);
    const auto top = static_cast<std::size_t>(n_);
    if (active_ == Ratio::b) {
        c[top] = scale_;
        c[top - 1] = scale_ * ratio_;
    } else {
        c[top] = scale_ * ratio_;
        c[top - 1] = scale_;
    }
    return Polynomial(std::move(c));
}

MomentMatrix moment_matrix(const Design& d, int n) {
    if (n < 1) throw ArgumentError("moment_matrix: n must be >= 1");
    const auto dim = static_cast<Eigen::Index>(n) + 1;
    // Power sums mu_k for k = 0..2n, then M(j,k) = mu_{j+k}.
    std::vector<double> mu(static_cast<std::size_t>(2 * n + 1), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        double xp = 1.0;
        for (auto& m : mu) {
            m += d.weights()[i] * xp;
            xp *= d.points()[i];
        }
    }
    MomentMatrix out(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index k = 0; k < dim; ++k) out(j, k) = mu[static_cast<std::size_t>(j + k)];
    return out;
}

Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& rhs, double rel_tol) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const auto& lambda = es.eigenvalues();
    const auto& v = es.eigenvectors();
    const double cutoff = rel_tol * lambda.cwiseAbs().maxCoeff();
    Eigen::VectorXd proj = v.transpose() * rhs;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        proj(i) = std::abs(lambda(i)) > cutoff ? proj(i) / lambda(i) : 0.0;
    }
    return v * proj;
}

Polynomial best_l2_coefficients(const Design& d, const DiscriminationProblem& prob) {
    const int m = prob.smaller_dim();
    const Polynomial g = prob.deviation_term();
    const MomentMatrix mm = moment_matrix(d, prob.n());
    const Eigen::MatrixXd a = mm.topLeftCorner(m, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double x = d.points()[i];
        const double wg = d.weights()[i] * g(x);
        double xp = 1.0;
        for (int j = 0; j < m; ++j) {
            rhs(j) += wg * xp;
            xp *= x;
        }
    }
    const Eigen::VectorXd beta = pinv_solve(a, rhs);
    return Polynomial(std::vector<double>(beta.data(), beta.data() + beta.size()));
}

double t_criterion(const Design& d, const DiscriminationProblem& prob) {
    const Polynomial residual = prob.deviation_term() - best_l2_coefficients(d, prob);
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double r = residual(d.points()[i]);
        total += d.weights()[i] * r * r;
    }
    return total;
}

}  // namespace tdisc
