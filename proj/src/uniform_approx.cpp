#include "tdisc/uniform_approx.hpp"

#include "tdisc/closed_form.hpp"
#include "tdisc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace tdisc {

namespace {

constexpr double kClusterRadius = 1e-7;

Polynomial target(int n, double b) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    c[static_cast<std::size_t>(n) - 1] = b;
    return Polynomial(std::move(c));
}

// Endpoints plus stationary points of p, sorted.
std::vector<double> critical_candidates(const Polynomial& p) {
    std::vector<double> xs = real_roots(p.derivative(), -1.0, 1.0);
    xs.push_back(-1.0);
    xs.push_back(1.0);
    std::sort(xs.begin(), xs.end());
    return xs;
}

int sign_of(double v) { return v >= 0.0 ? 1 : -1; }

}  // namespace

Polynomial BestApproxResult::error_polynomial() const { return target(n, b) - approximant; }

Polynomial shifted_chebyshev_psi(int n, double b) {
    if (n < 2) throw ArgumentError("shifted_chebyshev_psi: n must be >= 2");
    const double ab = std::abs(b);
    const double dn = static_cast<double>(n);
    const double shift = ab / dn;
    const double cn = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(0.5, n - 1) * std::pow(1.0 + shift, n);
    // x -> (-x - shift)/(1 + shift)
    Polynomial psi = compose_affine(chebyshev_t(static_cast<std::size_t>(n)), -1.0 / (1.0 + shift),
                                    -shift / (1.0 + shift)) *
                     cn;
    if (b < 0.0) {
        psi = compose_affine(psi, -1.0, 0.0) * (n % 2 == 0 ? 1.0 : -1.0);
    }
    std::vector<double> c = psi.coeffs();
    c.resize(static_cast<std::size_t>(n) + 1, 0.0);
    return Polynomial(std::move(c));
}

Polynomial closed_form_psi(int n, double b) {
    if (n < 2) throw ArgumentError("closed_form_psi: n must be >= 2");
    if (std::abs(b) > critical_b(n) * (1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << "closed_form_psi: |b| = " << std::abs(b) << " exceeds the critical ratio "
            << critical_b(n) << " for n = " << n << "; use remez";
        throw RegimeError(msg.str());
    }
    return shifted_chebyshev_psi(n, b);
}

double sup_abs(const Polynomial& p) {
    double best = 0.0;
    for (double x : critical_candidates(p)) best = std::max(best, std::abs(p(x)));
    return best;
}

std::vector<double> extremal_set(const Polynomial& psi, double tol) {
    const auto xs = critical_candidates(psi);
    double sup = 0.0;
    for (double x : xs) sup = std::max(sup, std::abs(psi(x)));
    std::vector<double> out;
    for (double x : xs) {
        if (std::abs(psi(x)) < (1.0 - tol) * sup) continue;
        if (!out.empty() && x - out.back() <= kClusterRadius) {
            // Keep the endpoint if one is in the cluster, else the larger value.
            const bool back_is_end = std::abs(out.back()) == 1.0;
            const bool x_is_end = std::abs(x) == 1.0;
            if (x_is_end || (!back_is_end && std::abs(psi(x)) > std::abs(psi(out.back()))))
                out.back() = x;
            continue;
        }
        out.push_back(x);
    }
    return out;
}

BestApproxResult remez(int n, double b, double tol, RemezOptions opts) {
    if (n < 2) throw ArgumentError("remez: n must be >= 2");
    if (!(tol > 0.0)) throw ArgumentError("remez: tol must be positive");
    if (!std::isfinite(b)) throw ArgumentError("remez: b must be finite");

    const Polynomial f = target(n, b);
    const auto m = static_cast<Eigen::Index>(n) - 1;  // approximant coefficients
    const auto refsize = m + 1;

    std::vector<double> ref = chebyshev_extrema(static_cast<std::size_t>(n));
    if (b >= 0.0) ref.erase(ref.begin()); else ref.pop_back();

    Polynomial approx;
    double level = 0.0;
    for (int iter = 1; iter <= opts.max_iterations; ++iter) {
        // p(x_k) + (-1)^k E = f(x_k)
        Eigen::MatrixXd a(refsize, refsize);
        Eigen::VectorXd rhs(refsize);
        for (Eigen::Index k = 0; k < refsize; ++k) {
            const double x = ref[static_cast<std::size_t>(k)];
            double xp = 1.0;
            for (Eigen::Index j = 0; j < m; ++j) {
                a(k, j) = xp;
                xp *= x;
            }
            a(k, m) = (k % 2 == 0) ? 1.0 : -1.0;
            rhs(k) = f(x);
        }
        const Eigen::VectorXd sol = a.fullPivLu().solve(rhs);
        approx = Polynomial(std::vector<double>(sol.data(), sol.data() + m));
        level = std::abs(sol(m));
        const Polynomial err = f - approx;

        // New reference: alternating local extrema with the largest |err|.
        std::vector<double> cand;
        for (double x : critical_candidates(err)) {
            if (!cand.empty() && x - cand.back() <= kClusterRadius) {
                if (std::abs(err(x)) > std::abs(err(cand.back()))) cand.back() = x;
                continue;
            }
            cand.push_back(x);
        }
        std::vector<double> alt;
        for (double x : cand) {
            if (!alt.empty() && sign_of(err(x)) == sign_of(err(alt.back()))) {
                if (std::abs(err(x)) > std::abs(err(alt.back()))) alt.back() = x;
                continue;
            }
            alt.push_back(x);
        }
        while (static_cast<Eigen::Index>(alt.size()) > refsize) {
            if (std::abs(err(alt.front())) < std::abs(err(alt.back()))) alt.erase(alt.begin());
            else alt.pop_back();
        }

        double sup = 0.0;
        double low = std::numeric_limits<double>::infinity();
        for (double x : cand) sup = std::max(sup, std::abs(err(x)));
        for (double x : alt) low = std::min(low, std::abs(err(x)));

        // Below this gap the levels are indistinguishable from rounding in
        // the monomial evaluation of err.
        double coeff_mass = 0.0;
        for (double c : err.coeffs()) coeff_mass += std::abs(c);
        const double gap = std::max(tol * sup, 8.0 * n * std::numeric_limits<double>::epsilon() * coeff_mass);

        const bool full = static_cast<Eigen::Index>(alt.size()) == refsize;
        if (full && sup - low <= gap && std::abs(sup - level) <= gap) {
            BestApproxResult out;
            out.n = n;
            out.b = b;
            out.approximant = approx;
            out.deviation = sup;
            out.extremal_points = extremal_set(err, std::max(tol, 1e-9));
            for (double x : out.extremal_points) out.signs.push_back(sign_of(err(x)));
            out.iterations = iter;
            return out;
        }
        if (!full) {
            std::ostringstream msg;
            msg << "remez: alternation lost at iteration " << iter << " (n=" << n << ", b=" << b
                << ", level=" << level << ")";
            throw SolverError(msg.str());
        }
        ref = std::move(alt);
    }
    std::ostringstream msg;
    msg << "remez: no convergence after " << opts.max_iterations << " iterations (n=" << n
        << ", b=" << b << ", last level=" << level << ", coefficients:";
    for (double c : approx.coeffs()) msg << ' ' << c;
    msg << ')';
    throw SolverError(msg.str());
}

}  // namespace tdisc
