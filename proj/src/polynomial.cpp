#include "tdisc/polynomial.hpp"

#include "tdisc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tdisc {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : Polynomial(std::vector<double>(coeffs)) {}

Polynomial Polynomial::monomial(std::size_t power, double scale) {
    std::vector<double> c(power + 1, 0.0);
    c[power] = scale;
    return Polynomial(std::move(c));
}

double Polynomial::coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
}

std::size_t Polynomial::degree() const noexcept {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (std::abs(coeffs_[i]) > kTrimThreshold) return i;
    }
    return 0;
}

bool Polynomial::is_zero() const noexcept {
    return std::none_of(coeffs_.begin(), coeffs_.end(),
                        [](double c) { return std::abs(c) > kTrimThreshold; });
}

double horner(std::span<const double> coeffs, double x) noexcept {
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

double Polynomial::operator()(double x) const noexcept { return horner(coeffs_, x); }

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{0.0};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::trimmed() const {
    std::vector<double> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(degree() + 1));
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
}

Polynomial chebyshev_t(std::size_t n) {
    Polynomial prev{1.0};
    if (n == 0) return prev;
    Polynomial cur{0.0, 1.0};
    const Polynomial two_x{0.0, 2.0};
    for (std::size_t k = 1; k < n; ++k) {
        Polynomial next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<double> chebyshev_extrema(std::size_t n) {
    if (n == 0) throw ArgumentError("chebyshev_extrema: n must be positive");
    std::vector<double> x(n + 1);
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
        x[i] = -std::cos(static_cast<double>(i) * std::numbers::pi / dn);
    }
    // Pin the exactly-known values so symmetric pairs cancel bit-for-bit.
    x.front() = -1.0;
    x.back() = 1.0;
    if (n % 2 == 0) x[n / 2] = 0.0;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) x[n - i] = -x[i];
    return x;
}

Polynomial compose_affine(const Polynomial& p, double a, double c) {
    if (a == 0.0) throw ArgumentError("compose_affine: degenerate map (a == 0)");
    // Horner in polynomial arithmetic: p(a x + c) = (...(c_m L + c_{m-1}) L + ...), L = a x + c.
    const Polynomial lin{c, a};
    const auto& pc = p.coeffs();
    Polynomial acc{pc.back()};
    for (std::size_t i = pc.size() - 1; i-- > 0;) {
        acc = acc * lin;
        acc += Polynomial{pc[i]};
    }
    return acc;
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
    const Polynomial q = p.trimmed();
    const std::size_t deg = q.degree();
    if (deg == 0) return {};
    const auto& c = q.coeffs();
    const double lead = c[deg];

    std::vector<double> candidates;
    if (deg == 1) {
        candidates.push_back(-c[0] / lead);
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg),
                                                          static_cast<Eigen::Index>(deg));
        for (std::size_t i = 1; i < deg; ++i)
            companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
        for (std::size_t i = 0; i < deg; ++i)
            companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -c[i] / lead;
        Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
        const auto& ev = es.eigenvalues();
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            const double re = ev[i].real();
            const double im = ev[i].imag();
            // Near-double roots split into complex pairs with |im| ~ sqrt(eps).
            if (std::abs(im) <= 1e-6 * std::max(1.0, std::abs(re))) candidates.push_back(re);
        }
    }

    const Polynomial dq = q.derivative();
    const double slack = 1e-9 * std::max(1.0, hi - lo);
    std::vector<double> roots;
    for (double r : candidates) {
        for (int it = 0; it < 8; ++it) {
            const double d = dq(r);
            if (d == 0.0) break;
            const double step = q(r) / d;
            const double next = r - step;
            if (!std::isfinite(next) || std::abs(q(next)) > std::abs(q(r))) break;
            r = next;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(r))) break;
        }
        if (r < lo - slack || r > hi + slack) continue;
        roots.push_back(std::clamp(r, lo, hi));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
                roots.end());
    return roots;
}

}  // namespace tdisc
