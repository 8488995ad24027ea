#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tdisc {

/// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
[[nodiscard]] double incomplete_beta(double a, double b, double x);

/// P(F <= f) for the central F distribution with (d1, d2) degrees of freedom.
[[nodiscard]] double f_cdf(double f, double d1, double d2);

/// Inverse of f_cdf in f, p in (0, 1).
[[nodiscard]] double f_quantile(double p, double d1, double d2);

/// P(F' > f) for the noncentral F with noncentrality lambda, as a
/// Poisson(lambda/2) mixture of incomplete betas truncated once the
/// remaining Poisson mass is below 1e-12.
[[nodiscard]] double noncentral_f_sf(double f, double d1, double d2, double lambda);

/// Integer replications at design points in [-1, 1].
struct ExactDesign {
    std::vector<double> points;
    std::vector<int> counts;

    [[nodiscard]] int total() const;
    /// Throws ArgumentError on empty, mismatched, out-of-range or
    /// non-positive input, or fewer than 5 observations.
    void validate() const;
};

/// 8, 16, 16, 8 observations at -1, -1/2, 1/2, 1.
[[nodiscard]] ExactDesign t_optimal_exact();
/// 12 observations at each of -1, -1/3, 1/3, 1.
[[nodiscard]] ExactDesign equidistant_exact();

struct PowerResult {
    double theta3 = 0.0;
    double estimate = 0.0;   // Monte-Carlo rejection fraction
    double std_error = 0.0;  // binomial standard error of the estimate
    double analytic = 0.0;   // noncentral-F power
    int reps = 0;
    std::uint64_t seed = 0;
};

/// theta3^2 * sum_i n_i (x_i^3 - l(x_i))^2 where l is the least-squares
/// line through x^3 under the counts.
[[nodiscard]] double noncentrality(const ExactDesign& d, double theta3);

/// Power of the F-test of theta2 = theta3 = 0 in the cubic model, with
/// (2, N-4) degrees of freedom at the given level.
[[nodiscard]] double f_test_power_analytic(const ExactDesign& d, double theta3, double level);

/// Monte-Carlo power of the same test for y = theta3 x^3 + N(0, 1) noise.
/// Replications are split in chunks of 10000, each drawing from its own
/// seeded substream, so results depend only on (seed, reps), not on the
/// number of workers.
[[nodiscard]] PowerResult f_test_power_mc(const ExactDesign& d, double theta3, int reps,
                                          std::uint64_t seed, double level, int workers = 1);

struct PowerRow {
    std::string design;
    std::vector<PowerResult> cells;
};

/// theta3 grid of the power table.
inline constexpr double kPowerThetas[] = {0.0, 0.5, 1.0, 1.5, 2.0};

/// Both designs over kPowerThetas at level 0.05. Cell k of design r uses
/// the substream family derive_seed(seed, 5 r + k).
[[nodiscard]] std::vector<PowerRow> power_table(int reps, std::uint64_t seed, int workers = 1);

/// design,theta3,mc_power,std_err,analytic_power,reps,seed
[[nodiscard]] std::string power_table_csv(const std::vector<PowerRow>& rows);

/// SplitMix64 mix of (seed, stream), used for every substream seed.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Standard normal quantile (Wichura AS 241, ~1e-16 relative).
[[nodiscard]] double normal_quantile(double p);

/// Human-readable name of the generator and variate method.
[[nodiscard]] std::string_view rng_description() noexcept;

}  // namespace tdisc
