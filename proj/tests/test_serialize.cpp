#include <doctest.h>
#include <tdisc/closed_form.hpp>
#include <tdisc/error.hpp>
#include <tdisc/serialize.hpp>
#include <tdisc/uniform_approx.hpp>

#include <json.hpp>

TEST_SUITE("serialize") {

TEST_CASE("json round trip is exact") {
    for (int n = 2; n <= 9; ++n) {
        const auto d = tdisc::t_optimal_design(n, 0.37 * tdisc::critical_b(n)).design;
        const auto back = tdisc::design_from_json(tdisc::design_to_json(d));
        CHECK(back == d);
    }
    const auto extra = tdisc::design_from_json(R"({"points":[-1,1],"weights":[0.5,0.5],"criterion":0.1})");
    CHECK(extra.size() == 2);
    CHECK_THROWS_AS((void)tdisc::design_from_json("{"), tdisc::ArgumentError);
    CHECK_THROWS_AS((void)tdisc::design_from_json(R"({"points":[0]})"), tdisc::ArgumentError);
    CHECK_THROWS_AS((void)tdisc::design_from_json(R"({"points":["a"],"weights":[1]})"), tdisc::ArgumentError);
}

TEST_CASE("csv round trip") {
    const auto d = tdisc::zero_b_family(4, 0.25).design;
    const auto csv = tdisc::design_to_csv(d);
    CHECK(csv.rfind("point,weight\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(tdisc::design_from_csv(csv) == d);
    CHECK(tdisc::design_from_csv("-1,0.5\r\n1,0.5\r\n").size() == 2);
    CHECK_THROWS_AS((void)tdisc::design_from_csv("point,weight\n1,x\n"), tdisc::ArgumentError);
}

TEST_CASE("approximation json") {
    const auto r = tdisc::remez(4, 0.3, 1e-12);
    const auto j = nlohmann::json::parse(tdisc::approx_to_json(r));
    CHECK(j.at("n") == 4);
    CHECK(j.at("deviation").get<double>() == r.deviation);
    CHECK(j.at("extremal_points").size() == r.extremal_points.size());
}

}
