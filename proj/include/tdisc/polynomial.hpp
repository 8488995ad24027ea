#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tdisc {

/// Real univariate polynomial stored as monomial coefficients,
/// coeffs()[i] is the coefficient of x^i.
class Polynomial {
public:
    /// Coefficients with |c| below this are ignored when reporting degree.
    static constexpr double kTrimThreshold = 1e-12;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    static Polynomial monomial(std::size_t power, double scale = 1.0);

    [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i, zero beyond the stored length.
    [[nodiscard]] double coeff(std::size_t i) const noexcept;

    /// Degree after trimming trailing coefficients below kTrimThreshold.
    /// The zero polynomial reports degree 0.
    [[nodiscard]] std::size_t degree() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] double leading_coeff() const noexcept { return coeff(degree()); }

    /// Horner evaluation.
    [[nodiscard]] double operator()(double x) const noexcept;

    [[nodiscard]] Polynomial derivative() const;

    /// Copy with near-zero trailing coefficients dropped.
    [[nodiscard]] Polynomial trimmed() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(double s);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
    friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

private:
    std::vector<double> coeffs_{0.0};
};

/// Chebyshev polynomial of the first kind, T_n, via T_{k+1} = 2x T_k - T_{k-1}.
[[nodiscard]] Polynomial chebyshev_t(std::size_t n);

/// The n+1 points -cos(i*pi/n), i = 0..n, where |T_n| = 1. Increasing.
[[nodiscard]] std::vector<double> chebyshev_extrema(std::size_t n);

/// q(x) = p(a*x + c). Throws ArgumentError for a == 0.
[[nodiscard]] Polynomial compose_affine(const Polynomial& p, double a, double c);

/// Real roots of p in [lo, hi], sorted, from the companion matrix
/// eigenvalues and polished by Newton steps. Empty for constants.
[[nodiscard]] std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

/// Horner evaluation of a raw coefficient span.
[[nodiscard]] double horner(std::span<const double> coeffs, double x) noexcept;

}  // namespace tdisc
