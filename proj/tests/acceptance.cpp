// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion-number ...]   (default: all)
#include <tdisc/closed_form.hpp>
#include <tdisc/continuation.hpp>
#include <tdisc/design.hpp>
#include <tdisc/maximin.hpp>
#include <tdisc/power.hpp>
#include <tdisc/uniform_approx.hpp>
#include <tdisc/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;
using tdisc::DiscriminationProblem;

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// 11 values of b spanning [-b*, b*].
std::vector<double> b_grid(int n) {
    std::vector<double> out;
    const double bs = tdisc::critical_b(n);
    for (int k = -5; k <= 5; ++k) out.push_back(k == 5 ? bs : k == -5 ? -bs : bs * k / 5.0);
    return out;
}

tdisc::Design optimal(int n, double b) {
    return b == 0 ? tdisc::zero_b_family(n, 0.5).design : tdisc::t_optimal_design(n, b).design;
}

double deviation_formula(int n, double b) { return std::pow(1 + std::abs(b) / n, n) / std::pow(2.0, n - 1); }

Outcome critical_values() {
    const double table[] = {1.0, 0.6864, 0.5280, 0.4306, 0.3646, 0.3168, 0.2801, 0.2509};
    bool ok = true;
    std::string bad;
    double worst_time = 0;
    for (int n = 3; n <= 10; ++n) {
        const auto t0 = Clock::now();
        const double v = tdisc::critical_b(n);
        char printed[32];
        std::snprintf(printed, sizeof printed, "%.4f", v);
        worst_time = std::max(worst_time, seconds_since(t0));
        char expected[32];
        std::snprintf(expected, sizeof expected, "%.4f", table[n - 3]);
        if (std::string(printed) != expected) {
            ok = false;
            bad += " n=" + std::to_string(n) + ":" + printed + "!=" + expected;
        }
    }
    const bool fast = worst_time < 1e-3;
    return {ok && fast, (bad.empty() ? std::string("all match") : "mismatch" + bad) +
                            fmt("; slowest %.2e s", worst_time)};
}

Outcome weights_n5() {
    const double expected[] = {0.038, 0.138, 0.262, 0.362, 0.2};
    double worst_w = 0, worst_t = 0;
    for (int k = 1; k <= 200; ++k) {
        const double b = 0.528 * k / 200.0;
        const auto d = tdisc::t_optimal_design(5, std::min(b, tdisc::critical_b(5))).design;
        for (int i = 0; i < 5; ++i) {
            const double w = d.weights()[static_cast<std::size_t>(i)];
            worst_w = std::max(worst_w, std::abs(std::round(w * 1000) / 1000 - expected[i]));
            const double bb = std::min(b, tdisc::critical_b(5));
            const double t = i == 4 ? 1.0 : -(1 + bb / 5) * std::cos((i + 1) * kPi / 5) - bb / 5;
            worst_t = std::max(worst_t, std::abs(d.points()[static_cast<std::size_t>(i)] - t));
        }
    }
    return {worst_w == 0 && worst_t <= 1e-12,
            fmt("max 3-d.p. weight deviation %.3g", worst_w) + fmt(", max support deviation %.3g", worst_t)};
}

Outcome equivalence() {
    const auto t0 = Clock::now();
    double worst_eq = 0, worst_app = 0;
    for (int n = 2; n <= 10; ++n) {
        for (double b : b_grid(n)) {
            for (double r : tdisc::equivalence_system(optimal(n, b), tdisc::closed_form_psi(n, b), n))
                worst_eq = std::max(worst_eq, std::abs(r));
        }
    }
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k <= n - 2; ++k) worst_app = std::max(worst_app, std::abs(tdisc::cosine_weight_identity(n, k)));
    const double dt = seconds_since(t0);
    return {worst_eq <= 1e-10 && worst_app <= 1e-12 && dt < 1.0,
            fmt("max equivalence residual %.3g", worst_eq) + fmt(", max cosine identity residual %.3g", worst_app) +
                fmt(", %.3f s", dt)};
}

Outcome remez_cross() {
    double worst_dev = 0, worst_fit = 0;
    int worst_it = 0;
    for (int n = 2; n <= 10; ++n) {
        for (double b : b_grid(n)) {
            const auto r = tdisc::remez(n, b, 1e-13);
            worst_dev = std::max(worst_dev, std::abs(r.deviation - deviation_formula(n, b)));
            worst_it = std::max(worst_it, r.iterations);
            const auto diff = r.error_polynomial() - tdisc::closed_form_psi(n, b);
            for (int i = 0; i <= 2000; ++i) worst_fit = std::max(worst_fit, std::abs(diff(-1 + i / 1000.0)));
        }
    }
    return {worst_dev <= 1e-9 && worst_fit <= 1e-8 && worst_it <= 20,
            fmt("max deviation error %.3g", worst_dev) + fmt(", max approximant gap %.3g", worst_fit) +
                ", max iterations " + std::to_string(worst_it)};
}

Outcome criterion_value() {
    double worst = 0;
    for (int n = 2; n <= 10; ++n) {
        for (double b : b_grid(n)) {
            const double t = tdisc::t_criterion(optimal(n, b), DiscriminationProblem::with_b(n, b));
            const double ref = std::pow(1 + std::abs(b) / n, 2 * n) / std::pow(2.0, 2 * n - 2);
            worst = std::max(worst, std::abs(t - ref) / ref);
        }
    }
    return {worst <= 1e-9, fmt("max relative error %.3g", worst)};
}

Outcome continuation() {
    const auto t0 = Clock::now();
    double worst_a = 0, worst_b = 0, worst_c = -1;
    bool fig_ok = true;
    for (int n = 3; n <= 5; ++n) {
        const auto anchor = tdisc::d1_optimal_start(n).design();
        const auto s0 = tdisc::solve_at(n, 0.0, 1e-12).design();
        for (std::size_t i = 0; i < anchor.size(); ++i) {
            worst_a = std::max(worst_a, std::abs(s0.points()[i] - anchor.points()[i]));
            worst_a = std::max(worst_a, std::abs(s0.weights()[i] - anchor.weights()[i]));
        }
        const double lim = tdisc::bbar_limit(n);
        for (double sgn : {1.0, -1.0}) {
            const auto edge = tdisc::solve_at(n, sgn * lim, 1e-12).design();
            const auto cf = tdisc::t_optimal_design(n, sgn * tdisc::critical_b(n)).design;
            if (edge.size() != cf.size()) {
                worst_b = INFINITY;
                continue;
            }
            for (std::size_t i = 0; i < cf.size(); ++i) {
                worst_b = std::max(worst_b, std::abs(edge.points()[i] - cf.points()[i]));
                worst_b = std::max(worst_b, std::abs(edge.weights()[i] - cf.weights()[i]));
            }
        }
        std::vector<double> grid;
        for (int k = 0; k < 40; ++k) grid.push_back(lim * k / 39.0);
        for (const auto& p : tdisc::trajectory(n, grid)) {
            worst_c = std::max(worst_c, tdisc::global_inequality(p.design, DiscriminationProblem::with_bbar(n, p.bbar)));
        }
        if (n == 5) {
            std::vector<double> open;
            for (int k = 1; k < 40; ++k) open.push_back(lim * k / 40.0);
            const auto traj = tdisc::trajectory(5, open);
            const std::string csv = tdisc::trajectory_csv(traj);
            fig_ok = fig_ok && csv.rfind("bbar,t_1,t_2,t_3,t_4,t_5,w_1,w_2,w_3,w_4,w_5,criterion\n", 0) == 0;
            for (const auto& p : traj) {
                fig_ok = fig_ok && p.design.size() == 5 && p.design.points().front() == -1.0 &&
                         p.design.points().back() == 1.0;
            }
        }
    }
    const double dt = seconds_since(t0);
    return {worst_a <= 1e-9 && worst_b <= 1e-5 && worst_c <= 1e-8 && fig_ok && dt < 30,
            fmt("(a) %.3g", worst_a) + fmt(", (b) %.3g", worst_b) + fmt(", (c) max margin %.3g", worst_c) +
                ", n=5 trajectory " + (fig_ok ? "5 points with +-1" : "BAD") + fmt(", %.2f s", dt)};
}

Outcome maximin() {
    const auto t0 = Clock::now();
    double worst = 0;
    bool increasing = true;
    for (int n = 3; n <= 5; ++n) {
        const auto d = tdisc::maximin_design(n, tdisc::RatioInterval::whole_line());
        if (d.size() != static_cast<std::size_t>(n + 1)) return {false, "whole-line design has wrong size"};
        for (int i = 0; i <= n; ++i) {
            const double x = std::cos((n - i) * kPi / n);
            const double w = (i == 0 || i == n) ? 1.0 / (2 * n) : 1.0 / n;
            worst = std::max(worst, std::abs(d.points()[static_cast<std::size_t>(i)] - x));
            worst = std::max(worst, std::abs(d.weights()[static_cast<std::size_t>(i)] - w));
        }
        const double top = 2 * tdisc::critical_b(n);
        double prev = -1;
        for (int k = 0; k < 50; ++k) {
            const double r = tdisc::r_value(n, top * k / 49.0);
            increasing = increasing && r > prev;
            prev = r;
        }
    }
    const double dt = seconds_since(t0);
    return {worst <= 1e-15 && increasing && dt < 60,
            fmt("max formula deviation %.3g", worst) + ", R(b) " + (increasing ? "strictly increasing" : "NOT increasing") +
                fmt(", %.2f s", dt)};
}

Outcome power_table() {
    const auto t0 = Clock::now();
    const double lambda = tdisc::noncentrality(tdisc::t_optimal_exact(), 1.0);
    if (lambda != 3.0) return {false, fmt("oracle lambda = %.17g, expected exactly 3", lambda)};
    const double printed[2][5] = {{0.051, 0.104, 0.301, 0.641, 0.896}, {0.053, 0.092, 0.218, 0.438, 0.638}};
    const auto rows = tdisc::power_table(100000, 20240229, 1);
    bool ok = true;
    std::string misses;
    double worst_printed = 0, worst_z = 0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 5; ++c) {
            const auto& cell = rows[r].cells[c];
            const double dp = std::abs(cell.estimate - printed[r][c]);
            const double z = std::abs(cell.estimate - cell.analytic) / cell.std_error;
            worst_printed = std::max(worst_printed, dp);
            worst_z = std::max(worst_z, z);
            if (dp > 0.015 || z > 3) {
                ok = false;
                char buf[160];
                std::snprintf(buf, sizeof buf, " %s@%.1f: mc %.4f analytic %.4f printed %.3f;", rows[r].design.c_str(),
                              cell.theta3, cell.estimate, cell.analytic, printed[r][c]);
                misses += buf;
            }
        }
    }
    const double dt = seconds_since(t0);
    return {ok && dt < 120, fmt("lambda=3 exactly; max |mc-printed| %.4f", worst_printed) +
                                fmt(", max |mc-analytic|/se %.2f", worst_z) + fmt(", %.1f s", dt) +
                                (misses.empty() ? "" : "; outside:" + misses)};
}

Outcome nonuniqueness() {
    double worst = 0;
    for (int n = 3; n <= 8; ++n) {
        const double ref = std::pow(2.0, 2 - 2 * n);
        for (int k = 0; k <= 10; ++k) {
            const auto d = tdisc::zero_b_family(n, k / 10.0).design;
            const double t = tdisc::t_criterion(d, DiscriminationProblem::with_b(n, 0));
            worst = std::max(worst, std::abs(t - ref) / ref);
        }
    }
    return {worst <= 1e-10, fmt("max relative spread %.3g", worst)};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "critical values to 4 d.p.", critical_values},
        {2, "closed-form design n=5", weights_n5},
        {3, "equivalence system and trigonometric identities", equivalence},
        {4, "remez versus closed form", remez_cross},
        {5, "criterion value formula", criterion_value},
        {6, "continuation consistency", continuation},
        {7, "maximin designs and R(b)", maximin},
        {8, "power table reproduction", power_table},
        {9, "nonuniqueness at b=0", nonuniqueness},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
