#pragma once

#include "tdisc/design.hpp"

namespace tdisc {

/// Prior range for b: the whole line, [b0, inf) or (-inf, -b0], b0 >= 0.
/// Other interval shapes are not supported.
class RatioInterval {
public:
    enum class Kind { whole_line, ray_up, ray_down };

    static RatioInterval whole_line() { return {Kind::whole_line, 0.0}; }
    static RatioInterval ray_up(double b0);
    static RatioInterval ray_down(double b0);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double b0() const noexcept { return b0_; }

private:
    RatioInterval(Kind k, double b0) : kind_(k), b0_(b0) {}
    Kind kind_;
    double b0_;
};

/// Maximin T-optimal discriminating design over the interval.
/// whole_line: masses 1/(2n) at +-1 and 1/n at cos(k pi/n), k = 1..n-1.
/// Rays: the T-optimal design at the finite end, closed form when
/// b0 <= critical_b(n) (alpha = 1/2 member at b0 = 0), continuation above.
[[nodiscard]] Design maximin_design(int n, const RatioInterval& interval, double tol = 1e-10);

/// inf over b in the interval of t_criterion(d, b). t_criterion is a
/// quadratic in b, so the infimum is evaluated exactly.
[[nodiscard]] double maximin_criterion(const Design& d, int n, const RatioInterval& interval);

/// R(b) = sup over designs of t_criterion at b, for b >= 0:
/// (1 + b/n)^(2n) / 2^(2n-2) on [0, critical_b(n)], continuation beyond.
[[nodiscard]] double r_value(int n, double b, double tol = 1e-10);

}  // namespace tdisc
