#include "oracles.hpp"

#include <doctest.h>
#include <tdisc/closed_form.hpp>
#include <tdisc/design.hpp>
#include <tdisc/error.hpp>

using tdisc::DiscriminationProblem;

TEST_SUITE("closedform") {

TEST_CASE("critical ratio") {
    CHECK(tdisc::critical_b(3) == doctest::Approx(1).epsilon(1e-15));
    CHECK(tdisc::critical_b(2) == doctest::Approx(2).epsilon(1e-15));
    CHECK(tdisc::critical_b(5) == doctest::Approx(5 - 2 * std::sqrt(5.0)).epsilon(1e-14));
    CHECK(tdisc::critical_b(10) == doctest::Approx(0.2509).epsilon(2e-4));
    for (int n = 3; n < 40; ++n) CHECK(tdisc::critical_b(n + 1) < tdisc::critical_b(n));
    CHECK_THROWS_AS((void)tdisc::critical_b(1), tdisc::ArgumentError);
}

TEST_CASE("support points") {
    const auto p = tdisc::support_points(3, 1);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == doctest::Approx(-1));
    CHECK(p[1] == doctest::Approx(1.0 / 3));
    CHECK(p[2] == 1.0);
    const auto q = tdisc::support_points(5, 0);
    CHECK(q[0] == doctest::Approx(-std::cos(oracle::pi / 5)));
    CHECK(q[3] == doctest::Approx(std::cos(oracle::pi / 5)));
    CHECK(q[4] == 1.0);
    CHECK_THROWS_AS((void)tdisc::support_points(3, 1.01), tdisc::RegimeError);
    for (int n = 2; n <= 12; ++n) {
        const double bs = tdisc::critical_b(n);
        for (double b : {0.0, 0.3 * bs, bs, -bs}) {
            const auto t = tdisc::support_points(n, b);
            CHECK(t.back() == 1.0);
            CHECK(t.front() >= -1.0);
            for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
        }
        CHECK(tdisc::support_points(n, bs).front() == doctest::Approx(-1).epsilon(1e-13));
    }
}

TEST_CASE("canonical weights") {
    const auto w3 = tdisc::canonical_weights(3);
    CHECK(w3[0] == doctest::Approx(1.0 / 6));
    CHECK(w3[1] == doctest::Approx(0.5));
    CHECK(w3[2] == doctest::Approx(1.0 / 3));
    const auto w5 = tdisc::canonical_weights(5);
    const double printed[] = {0.038, 0.138, 0.262, 0.362, 0.2};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(w5[static_cast<std::size_t>(i)] - printed[i]) < 5e-4);
    for (int n = 2; n <= 20; ++n) {
        const auto w = tdisc::canonical_weights(n);
        double s = 0;
        for (int i = 1; i <= n; ++i) {
            s += w[static_cast<std::size_t>(i - 1)];
            const double ref = i == n ? 1.0 / n : (1 - std::cos(i * oracle::pi / n)) / n;
            CHECK(w[static_cast<std::size_t>(i - 1)] == doctest::Approx(ref).epsilon(1e-14));
        }
        CHECK(s == doctest::Approx(1).epsilon(1e-14));
    }
}

TEST_CASE("explicit designs") {
    const auto d = tdisc::t_optimal_design(3, 1).design;
    CHECK(d.points()[1] == doctest::Approx(1.0 / 3));
    CHECK(d.weights()[0] == doctest::Approx(1.0 / 6));
    CHECK(d.weights()[1] == doctest::Approx(0.5));
    const auto m = tdisc::t_optimal_design(3, -1);
    CHECK(m.regime == tdisc::ClosedFormDesign::Regime::negative_b);
    CHECK(m.design.points()[1] == doctest::Approx(-1.0 / 3));
    CHECK(m.design.weights()[0] == doctest::Approx(1.0 / 3));
    CHECK(m.design.weights()[2] == doctest::Approx(1.0 / 6));
    CHECK_THROWS_AS((void)tdisc::t_optimal_design(3, 0), tdisc::ArgumentError);
    CHECK_THROWS_AS((void)tdisc::t_optimal_design(3, 2), tdisc::RegimeError);
    const auto d5 = tdisc::t_optimal_design(5, 0.4).design;
    const auto pts = tdisc::support_points(5, 0.4);
    for (std::size_t i = 0; i < 5; ++i) CHECK(d5.points()[i] == pts[i]);
}

TEST_CASE("zero-b family") {
    const auto a0 = tdisc::zero_b_family(3, 0).design;
    CHECK(a0.points() == std::vector<double>(tdisc::support_points(3, 0)));
    CHECK(a0.weights()[1] == doctest::Approx(0.5));
    const auto a1 = tdisc::zero_b_family(3, 1).design;
    CHECK(a1.points()[0] == -1.0);
    CHECK(a1.weights()[0] == doctest::Approx(1.0 / 3));
    CHECK(a1.weights()[2] == doctest::Approx(1.0 / 6));
    const auto h = tdisc::zero_b_family(3, 0.5).design;
    REQUIRE(h.size() == 4);
    CHECK(h.points()[1] == doctest::Approx(-0.5));
    CHECK(h.weights()[0] == doctest::Approx(1.0 / 6));
    CHECK(h.weights()[1] == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS((void)tdisc::zero_b_family(3, 1.5), tdisc::ArgumentError);
}

TEST_CASE("property: optimal criterion value") {
    for (int n = 2; n <= 12; ++n) {
        const double bs = tdisc::critical_b(n);
        for (int k = 1; k <= 10; ++k) {
            for (double sgn : {1.0, -1.0}) {
                const double b = sgn * bs * k / 10.0;
                const auto d = tdisc::t_optimal_design(n, b).design;
                const double t = tdisc::t_criterion(d, DiscriminationProblem::with_b(n, b));
                CHECK(t == doctest::Approx(std::pow(oracle::closed_deviation(n, b), 2)).epsilon(1e-9));
            }
        }
        for (int k = 0; k <= 10; ++k) {
            const auto d = tdisc::zero_b_family(n, k / 10.0).design;
            CHECK(tdisc::t_criterion(d, DiscriminationProblem::with_b(n, 0)) ==
                  doctest::Approx(std::pow(2.0, 2 - 2 * n)).epsilon(1e-10));
        }
    }
}

}
