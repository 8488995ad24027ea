#include "tdisc/power.hpp"

#include "tdisc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <thread>

namespace tdisc {

// ---------------------------------------------------------------- special functions

namespace {

double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps) return h;
    }
    throw SolverError("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw ArgumentError("incomplete_beta: a, b must be positive");
    if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("incomplete_beta: x must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double lbt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                       b * std::log1p(-x);
    const double front = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double f_cdf(double f, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw ArgumentError("f_cdf: degrees of freedom must be positive");
    if (f <= 0.0) return 0.0;
    return incomplete_beta(0.5 * d1, 0.5 * d2, d1 * f / (d1 * f + d2));
}

double f_quantile(double p, double d1, double d2) {
    if (!(p > 0.0 && p < 1.0)) throw ArgumentError("f_quantile: p must lie in (0, 1)");
    if (!(d1 > 0.0) || !(d2 > 0.0)) throw ArgumentError("f_quantile: degrees of freedom must be positive");
    // Bisection on the beta variable x = d1 f / (d1 f + d2) in (0, 1).
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (incomplete_beta(0.5 * d1, 0.5 * d2, mid) < p) lo = mid; else hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    return d2 * x / (d1 * (1.0 - x));
}

double noncentral_f_sf(double f, double d1, double d2, double lambda) {
    if (!(lambda >= 0.0)) throw ArgumentError("noncentral_f_sf: lambda must be >= 0");
    if (f <= 0.0) return 1.0;
    const double x = d1 * f / (d1 * f + d2);
    const double mu = 0.5 * lambda;
    double mass = 0.0;
    double sf = 0.0;
    for (int j = 0; j < 100000; ++j) {
        const double w = (mu == 0.0) ? (j == 0 ? 1.0 : 0.0)
                                     : std::exp(-mu + j * std::log(mu) - std::lgamma(j + 1.0));
        mass += w;
        sf += w * (1.0 - incomplete_beta(0.5 * d1 + j, 0.5 * d2, x));
        // Past the Poisson mode the remaining mass only shrinks.
        if (j >= mu && 1.0 - mass < 1e-12) break;
    }
    return sf;
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw ArgumentError("normal_quantile: p must lie in (0, 1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                  3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -val : val;
}

// ---------------------------------------------------------------- designs

int ExactDesign::total() const {
    int n = 0;
    for (int c : counts) n += c;
    return n;
}

void ExactDesign::validate() const {
    if (points.empty() || points.size() != counts.size())
        throw ArgumentError("exact design: points and counts must be non-empty and equal in length");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(std::abs(points[i]) <= 1.0)) throw ArgumentError("exact design: point outside [-1, 1]");
        if (counts[i] < 1) throw ArgumentError("exact design: counts must be >= 1");
    }
    if (total() < 5) throw ArgumentError("exact design: need at least 5 observations for the cubic F-test");
}

ExactDesign t_optimal_exact() { return {{-1.0, -0.5, 0.5, 1.0}, {8, 16, 16, 8}}; }
ExactDesign equidistant_exact() { return {{-1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0}, {12, 12, 12, 12}}; }

namespace {

// Observation-level cubic design matrix, one row per replicate.
Eigen::MatrixXd cubic_matrix(const ExactDesign& d) {
    Eigen::MatrixXd x(d.total(), 4);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const double t = d.points[i];
        for (int r = 0; r < d.counts[i]; ++r, ++row) x.row(row) << 1.0, t, t * t, t * t * t;
    }
    return x;
}

void require_full_rank(const ExactDesign& d) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(cubic_matrix(d));
    if (qr.rank() < 4)
        throw ArgumentError("exact design: rank-deficient cubic design matrix (need >= 4 distinct points)");
}

}  // namespace

double noncentrality(const ExactDesign& d, double theta3) {
    d.validate();
    double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const double x = d.points[i];
        const double n = d.counts[i];
        s0 += n;
        s1 += n * x;
        s2 += n * x * x;
        t0 += n * x * x * x;
        t1 += n * x * x * x * x;
    }
    const double det = s0 * s2 - s1 * s1;
    const double intercept = (s2 * t0 - s1 * t1) / det;
    const double slope = (s0 * t1 - s1 * t0) / det;
    double ss = 0.0;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const double x = d.points[i];
        const double r = x * x * x - (intercept + slope * x);
        ss += d.counts[i] * r * r;
    }
    return theta3 * theta3 * ss;
}

double f_test_power_analytic(const ExactDesign& d, double theta3, double level) {
    if (!(level > 0.0 && level < 1.0)) throw ArgumentError("power: level must lie in (0, 1)");
    d.validate();
    require_full_rank(d);
    const double d2 = d.total() - 4.0;
    const double crit = f_quantile(1.0 - level, 2.0, d2);
    return noncentral_f_sf(crit, 2.0, d2, noncentrality(d, theta3));
}

// ---------------------------------------------------------------- Monte Carlo

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string_view rng_description() noexcept {
    return "mt19937_64 per 10000-replicate chunk, chunk seed = splitmix64(seed, chunk); "
           "uniform = (bits>>11 + 0.5) 2^-53; normal = inverse CDF (AS 241)";
}

PowerResult f_test_power_mc(const ExactDesign& d, double theta3, int reps, std::uint64_t seed,
                            double level, int workers) {
    if (reps < 1000) throw ArgumentError("power: reps must be >= 1000");
    if (!(level > 0.0 && level < 1.0)) throw ArgumentError("power: level must lie in (0, 1)");
    d.validate();
    require_full_rank(d);

    const Eigen::MatrixXd x = cubic_matrix(d);
    const Eigen::Index nobs = x.rows();
    // Thin Q of [1, x, x^2, x^3]: columns 0-1 span the reduced model, so the
    // hypothesis sum of squares is z_2^2 + z_3^2 with z = Q' y.
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(x).householderQ() *
                              Eigen::MatrixXd::Identity(nobs, 4);
    const Eigen::VectorXd mean = theta3 * x.col(3);
    const double df2 = static_cast<double>(nobs - 4);
    const double crit = f_quantile(1.0 - level, 2.0, df2);

    constexpr int kChunk = 10000;
    const int nchunks = (reps + kChunk - 1) / kChunk;
    std::vector<long> rejected(static_cast<std::size_t>(nchunks), 0);

    auto run_chunk = [&](int c) {
        std::mt19937_64 gen(derive_seed(seed, static_cast<std::uint64_t>(c)));
        const int count = std::min(kChunk, reps - c * kChunk);
        Eigen::VectorXd y(nobs);
        long hits = 0;
        for (int r = 0; r < count; ++r) {
            for (Eigen::Index i = 0; i < nobs; ++i) {
                const double u = (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
                y(i) = mean(i) + normal_quantile(u);
            }
            const Eigen::Vector4d z = q.transpose() * y;
            const double rss = y.squaredNorm() - z.squaredNorm();
            const double num = z(2) * z(2) + z(3) * z(3);
            if ((num / 2.0) / (rss / df2) > crit) ++hits;
        }
        rejected[static_cast<std::size_t>(c)] = hits;
    };

    const int nworkers = std::clamp(workers, 1, nchunks);
    if (nworkers == 1) {
        for (int c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) {
            pool.emplace_back([&, w] {
                for (int c = w; c < nchunks; c += nworkers) run_chunk(c);
            });
        }
        for (auto& t : pool) t.join();
    }

    long total = 0;
    for (long h : rejected) total += h;
    PowerResult out;
    out.theta3 = theta3;
    out.reps = reps;
    out.seed = seed;
    out.estimate = static_cast<double>(total) / reps;
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / reps);
    out.analytic = f_test_power_analytic(d, theta3, level);
    return out;
}

std::vector<PowerRow> power_table(int reps, std::uint64_t seed, int workers) {
    if (reps < 10000) throw ArgumentError("power_table: reps must be >= 10000");
    const std::array<std::pair<const char*, ExactDesign>, 2> designs{
        {{"t_optimal", t_optimal_exact()}, {"equidistant", equidistant_exact()}}};
    std::vector<PowerRow> rows;
    std::uint64_t cell = 0;
    for (const auto& [name, d] : designs) {
        PowerRow row{name, {}};
        for (double theta : kPowerThetas) {
            PowerResult r = f_test_power_mc(d, theta, reps, derive_seed(seed, cell++), 0.05, workers);
            r.seed = seed;
            row.cells.push_back(r);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string power_table_csv(const std::vector<PowerRow>& rows) {
    std::string out = "design,theta3,mc_power,std_err,analytic_power,reps,seed\n";
    char buf[256];
    for (const auto& row : rows) {
        for (const auto& c : row.cells) {
            std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%d,%llu\n", row.design.c_str(),
                          c.theta3, c.estimate, c.std_error, c.analytic, c.reps,
                          static_cast<unsigned long long>(c.seed));
            out += buf;
        }
    }
    return out;
}

}  // namespace tdisc
