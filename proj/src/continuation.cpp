#include "tdisc/continuation.hpp"

#include "tdisc/closed_form.hpp"
#include "tdisc/error.hpp"
#include "tdisc/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace tdisc {

namespace {

using Eigen::Index;

// Per-support-point quantities shared by the residual, Jacobian and
// bbar-derivative. Index i runs over the n support points.
struct PointData {
    int n = 0;
    std::vector<double> x, w, psi, dpsi, ddpsi;
};

PointData evaluate(const ContinuationState& s) {
    PointData pd;
    const int n = s.n();
    pd.n = n;
    pd.x.reserve(static_cast<std::size_t>(n));
    pd.x.push_back(-1.0);
    pd.x.insert(pd.x.end(), s.interior.begin(), s.interior.end());
    pd.x.push_back(1.0);
    pd.w = s.weights;
    double rest = 1.0;
    for (double v : s.weights) rest -= v;
    pd.w.push_back(rest);

    const Polynomial p = s.psi();
    const Polynomial dp = p.derivative();
    const Polynomial ddp = dp.derivative();
    for (double x : pd.x) {
        pd.psi.push_back(p(x));
        pd.dpsi.push_back(dp(x));
        pd.ddpsi.push_back(ddp(x));
    }
    return pd;
}

double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Layout of theta.
Index q_index(int j) { return j; }
// Support point i (zero-based, 1..n-2) is interior[i-1].
Index t_index(int n, int i) { return (n - 1) + (i - 1); }
// Weight of support point i (zero-based, 0..n-2).
Index w_index(int n, int i) { return (n - 1) + (n - 2) + i; }

Eigen::VectorXd residual_from(const PointData& pd) {
    const int n = pd.n;
    Eigen::VectorXd g = Eigen::VectorXd::Zero(3 * n - 4);
    for (int j = 0; j <= n - 2; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += pd.w[i] * pd.psi[i] * ipow(pd.x[i], j);
        g(q_index(j)) = 2.0 * acc;
    }
    for (int i = 1; i <= n - 2; ++i) g(t_index(n, i)) = 2.0 * pd.w[i] * pd.psi[i] * pd.dpsi[i];
    const double last = pd.psi[n - 1] * pd.psi[n - 1];
    for (int i = 0; i <= n - 2; ++i) g(w_index(n, i)) = pd.psi[i] * pd.psi[i] - last;
    return g;
}

bool newton(ContinuationState& s, double tol, int max_iter) {
    const int n = s.n();
    for (int it = 0; it <= max_iter; ++it) {
        const Eigen::VectorXd g = stationarity_residual(s);
        if (!g.allFinite()) return false;
        if (g.lpNorm<Eigen::Infinity>() <= tol) return true;
        if (it == max_iter) break;
        const Eigen::MatrixXd j = stationarity_jacobian(s);
        const auto lu = j.fullPivLu();
        if (!lu.isInvertible()) return false;
        const Eigen::VectorXd step = lu.solve(g);
        s = ContinuationState::from_theta(n, s.theta() - step, s.bbar);
        if (!s.valid()) return false;
    }
    return false;
}

Eigen::VectorXd path_tangent(const ContinuationState& s) {
    return -stationarity_jacobian(s).fullPivLu().solve(stationarity_bbar_derivative(s));
}

void check_bbar(int n, double bbar) {
    if (!std::isfinite(bbar)) throw ArgumentError("bbar must be finite");
    if (std::abs(bbar) > bbar_limit(n) * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "bbar = " << bbar << " outside [-" << bbar_limit(n) << ", " << bbar_limit(n)
            << "] for n = " << n << "; that regime is covered by the closed-form designs";
        throw RegimeError(msg.str());
    }
}

}  // namespace

bool ContinuationState::valid() const noexcept {
    double prev = -1.0;
    for (double t : interior) {
        if (!(t > prev) || !std::isfinite(t)) return false;
        prev = t;
    }
    if (!(prev < 1.0)) return false;
    double rest = 1.0;
    for (double v : weights) {
        if (!(v > 0.0) || !std::isfinite(v)) return false;
        rest -= v;
    }
    for (double v : q)
        if (!std::isfinite(v)) return false;
    return rest > 0.0;
}

Design ContinuationState::design() const {
    std::vector<double> pts;
    pts.push_back(-1.0);
    pts.insert(pts.end(), interior.begin(), interior.end());
    pts.push_back(1.0);
    std::vector<double> w = weights;
    double rest = 1.0;
    for (double v : weights) rest -= v;
    w.push_back(rest);
    return Design(std::move(pts), std::move(w));
}

Polynomial ContinuationState::psi() const {
    std::vector<double> c = q;
    c.push_back(1.0);
    c.push_back(bbar);
    return Polynomial(std::move(c));
}

Eigen::VectorXd ContinuationState::theta() const {
    Eigen::VectorXd th(static_cast<Index>(dim()));
    Index k = 0;
    for (double v : q) th(k++) = v;
    for (double v : interior) th(k++) = v;
    for (double v : weights) th(k++) = v;
    return th;
}

ContinuationState ContinuationState::from_theta(int n, const Eigen::VectorXd& theta, double bbar) {
    if (n < 2 || theta.size() != 3 * n - 4)
        throw ArgumentError("continuation state: theta must have 3n-4 entries, n >= 2");
    ContinuationState s;
    const auto* p = theta.data();
    s.q.assign(p, p + (n - 1));
    s.interior.assign(p + (n - 1), p + (2 * n - 3));
    s.weights.assign(p + (2 * n - 3), p + (3 * n - 4));
    s.bbar = bbar;
    return s;
}

double bbar_limit(int n) { return 1.0 / critical_b(n); }

ContinuationState d1_optimal_start(int n) {
    if (n < 2) throw ArgumentError("d1_optimal_start: n must be >= 2");
    const auto m = static_cast<std::size_t>(n - 1);
    // psi = 2^-(n-2) T_{n-1} is monic of degree n-1; q are its lower coefficients.
    const Polynomial psi = chebyshev_t(m) * std::pow(0.5, n - 2);
    ContinuationState s;
    s.q.assign(psi.coeffs().begin(), psi.coeffs().begin() + static_cast<std::ptrdiff_t>(m));
    const auto ext = chebyshev_extrema(m);
    s.interior.assign(ext.begin() + 1, ext.end() - 1);
    s.weights.assign(m, 1.0 / (n - 1));
    s.weights.front() = 0.5 / (n - 1);
    s.bbar = 0.0;
    return s;
}

double h_form(const ContinuationState& s) {
    const PointData pd = evaluate(s);
    double h = 0.0;
    for (int i = 0; i < pd.n; ++i) h += pd.w[i] * pd.psi[i] * pd.psi[i];
    return h;
}

Eigen::VectorXd stationarity_residual(const ContinuationState& s) { return residual_from(evaluate(s)); }

Eigen::MatrixXd stationarity_jacobian(const ContinuationState& s) {
    const PointData pd = evaluate(s);
    const int n = pd.n;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(3 * n - 4, 3 * n - 4);

    for (int j = 0; j <= n - 2; ++j) {
        for (int k = 0; k <= n - 2; ++k) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += pd.w[i] * ipow(pd.x[i], j + k);
            jac(q_index(j), q_index(k)) = 2.0 * acc;
        }
        for (int i = 1; i <= n - 2; ++i) {
            const double dxj = j == 0 ? 0.0 : j * ipow(pd.x[i], j - 1);
            const double v = 2.0 * pd.w[i] * (pd.dpsi[i] * ipow(pd.x[i], j) + pd.psi[i] * dxj);
            jac(q_index(j), t_index(n, i)) = v;
            jac(t_index(n, i), q_index(j)) = v;
        }
        const double last = pd.psi[n - 1] * ipow(pd.x[n - 1], j);
        for (int i = 0; i <= n - 2; ++i) {
            const double v = 2.0 * (pd.psi[i] * ipow(pd.x[i], j) - last);
            jac(q_index(j), w_index(n, i)) = v;
            jac(w_index(n, i), q_index(j)) = v;
        }
    }
    for (int i = 1; i <= n - 2; ++i) {
        jac(t_index(n, i), t_index(n, i)) =
            2.0 * pd.w[i] * (pd.dpsi[i] * pd.dpsi[i] + pd.psi[i] * pd.ddpsi[i]);
        const double v = 2.0 * pd.psi[i] * pd.dpsi[i];
        jac(t_index(n, i), w_index(n, i)) = v;
        jac(w_index(n, i), t_index(n, i)) = v;
    }
    return jac;
}

Eigen::VectorXd stationarity_bbar_derivative(const ContinuationState& s) {
    const PointData pd = evaluate(s);
    const int n = pd.n;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(3 * n - 4);
    for (int j = 0; j <= n - 2; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += pd.w[i] * ipow(pd.x[i], n + j);
        d(q_index(j)) = 2.0 * acc;
    }
    for (int i = 1; i <= n - 2; ++i) {
        d(t_index(n, i)) = 2.0 * pd.w[i] *
                           (ipow(pd.x[i], n) * pd.dpsi[i] + pd.psi[i] * n * ipow(pd.x[i], n - 1));
    }
    const double last = pd.psi[n - 1] * ipow(pd.x[n - 1], n);
    for (int i = 0; i <= n - 2; ++i) d(w_index(n, i)) = 2.0 * (pd.psi[i] * ipow(pd.x[i], n) - last);
    return d;
}

ContinuationState continue_to(const ContinuationState& from, double bbar, double tol,
                              const ContinuationOptions& opts) {
    const int n = from.n();
    check_bbar(n, bbar);
    if (!(tol > 0.0)) throw ArgumentError("continuation: tol must be positive");
    ContinuationState cur = from;
    if (!newton(cur, tol, opts.max_newton))
        throw SolverError("continuation: starting state does not converge");

    double step = opts.step;
    while (cur.bbar != bbar) {
        const double dir = bbar > cur.bbar ? 1.0 : -1.0;
        const double next_bbar = std::abs(bbar - cur.bbar) <= step ? bbar : cur.bbar + dir * step;
        ContinuationState trial = ContinuationState::from_theta(
            n, cur.theta() + path_tangent(cur) * (next_bbar - cur.bbar), next_bbar);
        if (trial.valid() && newton(trial, tol, opts.max_newton)) {
            cur = std::move(trial);
            step = std::min(opts.step, 2.0 * step);
            continue;
        }
        step *= 0.5;
        if (step < opts.min_step) {
            std::ostringstream msg;
            msg << "continuation: step fell below " << opts.min_step << " at bbar = " << cur.bbar
                << " while heading to " << bbar << " (n = " << n << ")";
            throw SolverError(msg.str());
        }
    }

    const double margin = global_inequality(cur.psi(), h_form(cur));
    if (margin > opts.inequality_tol) {
        std::ostringstream msg;
        msg << "continuation: stationary point at bbar = " << bbar
            << " violates psi^2 <= H on [-1, 1] by " << margin << " (not optimal)";
        throw SolverError(msg.str());
    }
    return cur;
}

ContinuationState solve_at(int n, double bbar, double tol, const ContinuationOptions& opts) {
    if (n < 2) throw ArgumentError("solve_at: n must be >= 2");
    check_bbar(n, bbar);
    return continue_to(d1_optimal_start(n), bbar, tol, opts);
}

std::vector<TrajectoryPoint> trajectory(int n, std::span<const double> grid, double tol,
                                        const ContinuationOptions& opts) {
    if (n < 2) throw ArgumentError("trajectory: n must be >= 2");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw ArgumentError("trajectory: grid must be sorted");
    for (double b : grid) check_bbar(n, b);

    const ContinuationState anchor = continue_to(d1_optimal_start(n), 0.0, tol, opts);
    const auto split = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), 0.0) - grid.begin());

    // Negative part marched downward from 0, then reversed into grid order.
    std::vector<TrajectoryPoint> out;
    out.reserve(grid.size());
    ContinuationState cur = anchor;
    for (std::size_t i = split; i-- > 0;) {
        cur = continue_to(cur, grid[i], tol, opts);
        out.push_back({grid[i], cur.design(), h_form(cur)});
    }
    std::reverse(out.begin(), out.end());
    cur = anchor;
    for (std::size_t i = split; i < grid.size(); ++i) {
        cur = continue_to(cur, grid[i], tol, opts);
        out.push_back({grid[i], cur.design(), h_form(cur)});
    }
    return out;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& traj) {
    std::string out;
    if (traj.empty()) return out;
    const std::size_t npts = traj.front().design.size();
    out += "bbar";
    for (std::size_t i = 1; i <= npts; ++i) out += ",t_" + std::to_string(i);
    for (std::size_t i = 1; i <= npts; ++i) out += ",w_" + std::to_string(i);
    out += ",criterion\n";
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
    };
    for (const auto& row : traj) {
        put(row.bbar);
        for (double v : row.design.points()) { out += ','; put(v); }
        for (double v : row.design.weights()) { out += ','; put(v); }
        out += ',';
        put(row.criterion);
        out += '\n';
    }
    return out;
}

std::vector<Eigen::VectorXd> taylor_coefficients(const ContinuationState& at, int order) {
    if (order < 1 || order > 3) throw ArgumentError("taylor_coefficients: order must be 1..3");
    const int n = at.n();
    const Eigen::VectorXd theta0 = at.theta();
    const auto lu = stationarity_jacobian(at).fullPivLu();

    std::vector<Eigen::VectorXd> coeffs;
    coeffs.push_back(-lu.solve(stationarity_bbar_derivative(at)));

    for (int s = 1; s < order; ++s) {
        const int m = s + 1;  // derivative order
        // g along the truncated series theta_(s)(bbar0 + delta).
        auto phi = [&](double delta) {
            Eigen::VectorXd th = theta0;
            double p = 1.0;
            for (const auto& c : coeffs) {
                p *= delta;
                th += c * p;
            }
            return stationarity_residual(ContinuationState::from_theta(n, th, at.bbar + delta));
        };
        auto stencil = [&](double h) -> Eigen::VectorXd {
            if (m == 2) return (phi(h) - 2.0 * phi(0.0) + phi(-h)) / (h * h);
            return (phi(2.0 * h) - 2.0 * phi(h) + 2.0 * phi(-h) - phi(-2.0 * h)) / (2.0 * h * h * h);
        };
        // Roundoff in an m-th difference scales like eps/h^m, so the base
        // step grows with the order.
        const double h = m == 2 ? 1e-4 : 1e-2;
        const Eigen::VectorXd deriv = (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
        const double fact = m == 2 ? 2.0 : 6.0;
        coeffs.push_back(-lu.solve(deriv) / fact);
    }
    return coeffs;
}

}  // namespace tdisc
