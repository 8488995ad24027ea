#pragma once

#include "tdisc/design.hpp"
#include "tdisc/polynomial.hpp"

#include <string>
#include <vector>

namespace tdisc {

/// Compensated summation for sums with heavy cancellation.
class KahanSum {
public:
    void add(double v) noexcept {
        const double y = v - carry_;
        const double t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// r_k = sum_i w_i psi(x_i) x_i^k for k = 0..n-2. All near zero iff the
/// weights are optimal for a support on the extremal set of psi.
[[nodiscard]] std::vector<double> equivalence_system(const Design& d, const Polynomial& psi, int n);

/// sum_{i=1..n} (-1)^i cos(k i pi/n) w_i with the canonical weights.
/// Requires 0 <= k <= n-2 (ArgumentError otherwise).
[[nodiscard]] double cosine_weight_identity(int n, int k);

struct AlternationReport {
    bool alternates = false;
    double spread = 0.0;             // (max - min)/max of |psi| over the support
    std::vector<double> values;      // psi at each support point
};

/// Passes when psi changes sign between consecutive support points and
/// |psi| is constant over the support within 1e-8 (relative).
[[nodiscard]] AlternationReport alternation_check(const Design& d, const Polynomial& psi);

/// max over x in [-1,1] of psi(x)^2 - h. Non-positive (up to roundoff)
/// exactly when |psi|^2 <= h holds on the whole interval.
[[nodiscard]] double global_inequality(const Polynomial& psi, double h);

/// Same check for a design: psi is the weighted-L2 residual of the
/// problem's deviation term and h the T-criterion of the design.
[[nodiscard]] double global_inequality(const Design& d, const DiscriminationProblem& prob);

struct Check {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

/// Full optimality report of a design for the b-parameterized problem.
[[nodiscard]] std::vector<Check> verify_design(const Design& d, int n, double b);

/// {"checks":[{"name":..,"residual":..,"tolerance":..,"pass":..}],"all_pass":..}
[[nodiscard]] std::string checks_to_json(const std::vector<Check>& checks);

}  // namespace tdisc
