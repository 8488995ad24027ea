#include "tdisc/closed_form.hpp"

#include "tdisc/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tdisc {

namespace {

constexpr double kMergeTolerance = 1e-12;

void check_n(int n, const char* who) {
    if (n < 2) throw ArgumentError(std::string(who) + ": n must be >= 2");
}

void check_regime(int n, double b, const char* who) {
    if (!std::isfinite(b)) throw ArgumentError(std::string(who) + ": b must be finite");
    if (std::abs(b) > critical_b(n) * (1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << who << ": |b| = " << std::abs(b) << " exceeds the critical ratio " << critical_b(n)
            << " for n = " << n << "; the design must be computed by continuation in 1/b";
        throw RegimeError(msg.str());
    }
}

}  // namespace

double critical_b(int n) {
    check_n(n, "critical_b");
    const double t = std::tan(std::numbers::pi / (2.0 * n));
    return n * t * t;
}

std::vector<double> support_points(int n, double b) {
    check_n(n, "support_points");
    check_regime(n, b, "support_points");
    const double shift = std::abs(b) / n;
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        double x = -(1.0 + shift) * std::cos(i * std::numbers::pi / n) - shift;
        // Roundoff at the boundary of the regime; genuine excursions are caught by Design.
        if (x < -1.0 && x > -1.0 - kMergeTolerance) x = -1.0;
        t[static_cast<std::size_t>(i - 1)] = x;
    }
    t.back() = 1.0;
    return t;
}

std::vector<double> canonical_weights(int n) {
    check_n(n, "canonical_weights");
    std::vector<double> w(static_cast<std::size_t>(n));
    const double scale = 2.0 / n;
    for (int i = 1; i <= n / 2; ++i) {
        const double s = std::sin(i * std::numbers::pi / (2.0 * n));
        const double c = std::cos(i * std::numbers::pi / (2.0 * n));
        w[static_cast<std::size_t>(i - 1)] = scale * s * s;
        w[static_cast<std::size_t>(n - i - 1)] = scale * c * c;
    }
    w.back() = 1.0 / n;
    return w;
}

ClosedFormDesign t_optimal_design(int n, double b) {
    check_n(n, "t_optimal_design");
    if (b == 0.0)
        throw ArgumentError("t_optimal_design: b = 0 has a one-parameter family of optima; "
                            "use zero_b_family with an explicit alpha");
    check_regime(n, b, "t_optimal_design");
    Design d(support_points(n, b), canonical_weights(n));
    if (b > 0.0) return {std::move(d), ClosedFormDesign::Regime::positive_b, n, b};
    return {d.reflected(), ClosedFormDesign::Regime::negative_b, n, b};
}

ClosedFormDesign zero_b_family(int n, double alpha) {
    check_n(n, "zero_b_family");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ArgumentError("zero_b_family: alpha must lie in [0, 1]");
    const Design xi1(support_points(n, 0.0), canonical_weights(n));
    const Design xi2 = xi1.reflected();

    // Merge two sorted weighted supports.
    std::vector<double> pts;
    std::vector<double> wts;
    auto push = [&](double x, double w) {
        if (w <= 0.0) return;
        if (!pts.empty() && std::abs(x - pts.back()) <= kMergeTolerance) {
            wts.back() += w;
            return;
        }
        pts.push_back(x);
        wts.push_back(w);
    };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xi1.size() || j < xi2.size()) {
        const bool take1 = j >= xi2.size() || (i < xi1.size() && xi1.points()[i] <= xi2.points()[j]);
        if (take1) {
            push(xi1.points()[i], (1.0 - alpha) * xi1.weights()[i]);
            ++i;
        } else {
            push(xi2.points()[j], alpha * xi2.weights()[j]);
            ++j;
        }
    }
    return {Design(std::move(pts), std::move(wts)), ClosedFormDesign::Regime::zero_b_family, n, 0.0,
            alpha};
}

}  // namespace tdisc
