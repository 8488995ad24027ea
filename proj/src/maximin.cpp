#include "tdisc/maximin.hpp"

#include "tdisc/closed_form.hpp"
#include "tdisc/continuation.hpp"
#include "tdisc/error.hpp"
#include "tdisc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tdisc {

RatioInterval RatioInterval::ray_up(double b0) {
    if (!(b0 >= 0.0) || !std::isfinite(b0)) throw ArgumentError("ray_up: b0 must be finite and >= 0");
    return {Kind::ray_up, b0};
}

RatioInterval RatioInterval::ray_down(double b0) {
    if (!(b0 >= 0.0) || !std::isfinite(b0)) throw ArgumentError("ray_down: b0 must be finite and >= 0");
    return {Kind::ray_down, b0};
}

namespace {

Design optimal_at(int n, double b, double tol) {
    if (b == 0.0) return zero_b_family(n, 0.5).design;
    if (b <= critical_b(n)) return t_optimal_design(n, b).design;
    return solve_at(n, 1.0 / b, tol).design();
}

}  // namespace

Design maximin_design(int n, const RatioInterval& interval, double tol) {
    if (n < 2) throw ArgumentError("maximin_design: n must be >= 2");
    switch (interval.kind()) {
    case RatioInterval::Kind::whole_line: {
        std::vector<double> pts = chebyshev_extrema(static_cast<std::size_t>(n));
        std::vector<double> w(pts.size(), 1.0 / n);
        w.front() = w.back() = 0.5 / n;
        return Design(std::move(pts), std::move(w));
    }
    case RatioInterval::Kind::ray_up:
        return optimal_at(n, interval.b0(), tol);
    case RatioInterval::Kind::ray_down:
        return optimal_at(n, interval.b0(), tol).reflected();
    }
    throw ArgumentError("maximin_design: unknown interval kind");
}

double maximin_criterion(const Design& d, int n, const RatioInterval& interval) {
    // t(b) = c0 + c1 b + c2 b^2 from three exact evaluations.
    const double t0 = t_criterion(d, DiscriminationProblem::with_b(n, 0.0));
    const double tp = t_criterion(d, DiscriminationProblem::with_b(n, 1.0));
    const double tm = t_criterion(d, DiscriminationProblem::with_b(n, -1.0));
    const double c2 = 0.5 * (tp + tm) - t0;
    const double c1 = 0.5 * (tp - tm);
    auto t = [&](double b) { return t0 + c1 * b + c2 * b * b; };

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (interval.kind() == RatioInterval::Kind::ray_up) lo = interval.b0();
    if (interval.kind() == RatioInterval::Kind::ray_down) hi = -interval.b0();

    // c2 is the residual variance of x^(n-1); when it vanishes so does c1
    // (Cauchy-Schwarz) and t is constant in b.
    if (c2 <= 1e-15 * std::max(1.0, t0)) return t0;
    const double vertex = std::clamp(-c1 / (2.0 * c2), lo, hi);
    return std::max(0.0, t(vertex));
}

double r_value(int n, double b, double tol) {
    if (n < 2) throw ArgumentError("r_value: n must be >= 2");
    if (!(b >= 0.0) || !std::isfinite(b)) throw ArgumentError("r_value: b must be finite and >= 0");
    if (b <= critical_b(n)) return std::pow(1.0 + b / n, 2 * n) / std::pow(2.0, 2 * n - 2);
    const Design d = solve_at(n, 1.0 / b, tol).design();
    return t_criterion(d, DiscriminationProblem::with_b(n, b));
}

}  // namespace tdisc
