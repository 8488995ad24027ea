#include "oracles.hpp"

#include <doctest.h>
#include <tdisc/closed_form.hpp>
#include <tdisc/continuation.hpp>
#include <tdisc/error.hpp>
#include <tdisc/verify.hpp>

#include <vector>

using tdisc::ContinuationState;

TEST_SUITE("continuation") {

TEST_CASE("D1-optimal start") {
    const auto s5 = tdisc::d1_optimal_start(5);
    const auto d5 = s5.design();
    const double r = 1 / std::sqrt(2.0);
    const std::vector<double> pts{-1, -r, 0, r, 1};
    const std::vector<double> w{0.125, 0.25, 0.25, 0.25, 0.125};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(d5.points()[i] == doctest::Approx(pts[i]).epsilon(1e-15).scale(1));
        CHECK(d5.weights()[i] == doctest::Approx(w[i]).epsilon(1e-15));
    }
    const auto d3 = tdisc::d1_optimal_start(3).design();
    CHECK(d3.points()[1] == doctest::Approx(0).scale(1));
    CHECK(d3.weights()[1] == doctest::Approx(0.5));
    CHECK(tdisc::h_form(tdisc::d1_optimal_start(3)) == doctest::Approx(0.25));
    for (int n = 2; n <= 10; ++n) {
        const auto s = tdisc::d1_optimal_start(n);
        CHECK(s.dim() == static_cast<std::size_t>(3 * n - 4));
        CHECK(tdisc::h_form(s) == doctest::Approx(std::pow(2.0, -2 * (n - 2))).epsilon(1e-12));
        CHECK(tdisc::stationarity_residual(s).lpNorm<Eigen::Infinity>() <= 1e-9);
        double sum = 0;
        const auto d = s.design();
        for (double v : d.weights()) sum += v;
        CHECK(sum == doctest::Approx(1).epsilon(1e-14));
    }
}

TEST_CASE("h_form of a degenerate state") {
    ContinuationState s = tdisc::d1_optimal_start(3);
    s.weights = {1e-300, 1.0 - 2e-300};
    // psi vanishes at the interior point -> H ~ weight at the ends only
    s.q = {0.0, 0.0};
    s.interior = {0.0};
    CHECK(tdisc::h_form(s) == doctest::Approx(0).scale(1e-250));
}

TEST_CASE("residual detects a perturbed optimum") {
    auto s = tdisc::d1_optimal_start(5);
    s.interior[1] += 1e-3;
    CHECK(tdisc::stationarity_residual(s).norm() > 1e-6);
}

TEST_CASE("analytic derivatives match finite differences") {
    for (int n = 2; n <= 7; ++n) {
        for (double bbar : {0.0, 0.4 * tdisc::bbar_limit(n), -0.8 * tdisc::bbar_limit(n)}) {
            const auto s = tdisc::solve_at(n, bbar, 1e-12);
            const Eigen::VectorXd th = s.theta();
            const Eigen::MatrixXd j = tdisc::stationarity_jacobian(s);
            const double h = 1e-6;
            for (Eigen::Index k = 0; k < th.size(); ++k) {
                Eigen::VectorXd tp = th, tm = th;
                tp(k) += h;
                tm(k) -= h;
                const Eigen::VectorXd col =
                    (tdisc::stationarity_residual(ContinuationState::from_theta(n, tp, bbar)) -
                     tdisc::stationarity_residual(ContinuationState::from_theta(n, tm, bbar))) /
                    (2 * h);
                CHECK((col - j.col(k)).lpNorm<Eigen::Infinity>() < 1e-7);
            }
            const Eigen::VectorXd db =
                (tdisc::stationarity_residual(ContinuationState::from_theta(n, th, bbar + h)) -
                 tdisc::stationarity_residual(ContinuationState::from_theta(n, th, bbar - h))) /
                (2 * h);
            CHECK((db - tdisc::stationarity_bbar_derivative(s)).lpNorm<Eigen::Infinity>() < 1e-7);
        }
    }
}

TEST_CASE("solve_at examples") {
    const auto s0 = tdisc::solve_at(5, 0, 1e-10);
    CHECK(s0.design().points()[1] == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(tdisc::bbar_limit(5) == doctest::Approx(1.894).epsilon(1e-3));

    const double lim = tdisc::bbar_limit(5);
    const auto edge = tdisc::solve_at(5, lim, 1e-12).design();
    const auto cf = tdisc::t_optimal_design(5, tdisc::critical_b(5)).design;
    REQUIRE(edge.size() == cf.size());
    for (std::size_t i = 0; i < cf.size(); ++i) {
        CHECK(std::abs(edge.points()[i] - cf.points()[i]) <= 1e-5);
        CHECK(std::abs(edge.weights()[i] - cf.weights()[i]) <= 1e-5);
    }
    const auto mirror = tdisc::solve_at(5, -lim, 1e-12).design();
    const auto refl = edge.reflected();
    for (std::size_t i = 0; i < cf.size(); ++i) {
        CHECK(mirror.points()[i] == doctest::Approx(refl.points()[i]).epsilon(1e-9).scale(1));
        CHECK(mirror.weights()[i] == doctest::Approx(refl.weights()[i]).epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)tdisc::solve_at(5, 2.0, 1e-10), tdisc::RegimeError);
    CHECK_THROWS_AS((void)tdisc::solve_at(5, 0.5, 0.0), tdisc::ArgumentError);
}

TEST_CASE("property: continuation designs are T-optimal") {
    for (int n = 3; n <= 6; ++n) {
        const double lim = tdisc::bbar_limit(n);
        for (int k = 1; k <= 4; ++k) {
            const double bbar = lim * k / 5.0;
            const auto s = tdisc::solve_at(n, bbar, 1e-12);
            CHECK(tdisc::stationarity_residual(s).lpNorm<Eigen::Infinity>() <= 1e-12);
            CHECK(tdisc::global_inequality(s.psi(), tdisc::h_form(s)) <= 1e-8);
            // H is the criterion of the bbar-parameterized problem.
            const auto prob = tdisc::DiscriminationProblem::with_bbar(n, bbar);
            CHECK(tdisc::t_criterion(s.design(), prob) == doctest::Approx(tdisc::h_form(s)).epsilon(1e-9));
            // Same design in the b-parameterization, scaled by bbar^2.
            const auto pb = tdisc::DiscriminationProblem::with_b(n, 1 / bbar);
            CHECK(tdisc::t_criterion(s.design(), pb) * bbar * bbar == doctest::Approx(tdisc::h_form(s)).epsilon(1e-9));
        }
    }
}

TEST_CASE("trajectory") {
    const std::vector<double> single{0.0};
    const auto t0 = tdisc::trajectory(5, single);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].design.size() == 5);

    const double lim = tdisc::bbar_limit(5);
    std::vector<double> grid;
    for (int k = -10; k <= 10; ++k) grid.push_back(lim * 0.95 * k / 10.0);
    const auto traj = tdisc::trajectory(5, grid);
    REQUIRE(traj.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(traj[i].bbar == grid[i]);
        CHECK(traj[i].design.size() == 5);
        CHECK(traj[i].design.points().front() == -1.0);
        CHECK(traj[i].design.points().back() == 1.0);
        const auto& mirror = traj[grid.size() - 1 - i].design.reflected();
        for (std::size_t k = 0; k < 5; ++k) {
            CHECK(traj[i].design.points()[k] == doctest::Approx(mirror.points()[k]).epsilon(1e-9).scale(1));
            CHECK(traj[i].design.weights()[k] == doctest::Approx(mirror.weights()[k]).epsilon(1e-9));
        }
    }
    const auto csv = tdisc::trajectory_csv(traj);
    CHECK(csv.rfind("bbar,t_1,t_2,t_3,t_4,t_5,w_1,w_2,w_3,w_4,w_5,criterion\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(grid.size() + 1));
    CHECK(csv.find('\r') == std::string::npos);
    const std::vector<double> unsorted{0.5, 0.1};
    CHECK_THROWS_AS((void)tdisc::trajectory(5, unsorted), tdisc::ArgumentError);
}

TEST_CASE("taylor coefficients have the expected local error orders") {
    const int n = 5;
    const double b0 = 0.6;
    const auto s = tdisc::solve_at(n, b0, 1e-14);
    const auto c = tdisc::taylor_coefficients(s, 3);
    REQUIRE(c.size() == 3);
    const Eigen::VectorXd th0 = s.theta();
    auto err = [&](double h, int order) {
        const Eigen::VectorXd exact = tdisc::continue_to(s, b0 + h, 1e-14).theta();
        Eigen::VectorXd approx = th0;
        double p = 1;
        for (int k = 0; k < order; ++k) {
            p *= h;
            approx += c[static_cast<std::size_t>(k)] * p;
        }
        return (exact - approx).norm();
    };
    const double h = 0.04;
    const double r1 = err(h, 1) / err(h / 2, 1);
    const double r2 = err(h, 2) / err(h / 2, 2);
    const double r3 = err(h, 3) / err(h / 2, 3);
    CHECK(r1 == doctest::Approx(4).epsilon(0.15));
    CHECK(r2 == doctest::Approx(8).epsilon(0.15));
    CHECK(r3 == doctest::Approx(16).epsilon(0.25));
    CHECK_THROWS_AS((void)tdisc::taylor_coefficients(s, 4), tdisc::ArgumentError);
}

}
