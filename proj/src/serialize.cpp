#include "tdisc/serialize.hpp"

#include "tdisc/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace tdisc {

std::string design_to_json(const Design& d) {
    nlohmann::json j{{"points", d.points()}, {"weights", d.weights()}};
    return j.dump();
}

Design design_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError(std::string("design json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j.contains("weights"))
        throw ArgumentError("design json: expected an object with \"points\" and \"weights\"");
    try {
        return Design(j.at("points").get<std::vector<double>>(), j.at("weights").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("design json: ") + e.what());
    }
}

std::string design_to_csv(const Design& d) {
    std::string out = "point,weight\n";
    char buf[64];
    for (std::size_t i = 0; i < d.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", d.points()[i], d.weights()[i]);
        out += buf;
    }
    return out;
}

Design design_from_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<double> pts;
    std::vector<double> wts;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        const std::string a = line.substr(0, comma);
        const std::string b = comma == std::string::npos ? std::string() : line.substr(comma + 1);
        char* end_a = nullptr;
        char* end_b = nullptr;
        const double x = std::strtod(a.c_str(), &end_a);
        const double w = std::strtod(b.c_str(), &end_b);
        const bool numeric = comma != std::string::npos && end_a != a.c_str() && *end_a == '\0' &&
                             end_b != b.c_str() && *end_b == '\0';
        if (!numeric) {
            if (first) {
                first = false;
                continue;
            }
            throw ArgumentError("design csv: malformed row '" + line + "'");
        }
        first = false;
        pts.push_back(x);
        wts.push_back(w);
    }
    return Design(std::move(pts), std::move(wts));
}

std::string approx_to_json(const BestApproxResult& r) {
    nlohmann::json j{{"n", r.n},
                     {"b", r.b},
                     {"approximant", r.approximant.coeffs()},
                     {"deviation", r.deviation},
                     {"extremal_points", r.extremal_points},
                     {"signs", r.signs},
                     {"iterations", r.iterations}};
    return j.dump();
}

}  // namespace tdisc
