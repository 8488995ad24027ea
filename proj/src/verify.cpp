#include "tdisc/verify.hpp"

#include "tdisc/closed_form.hpp"
#include "tdisc/error.hpp"
#include "tdisc/uniform_approx.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tdisc {

std::vector<double> equivalence_system(const Design& d, const Polynomial& psi, int n) {
    if (n < 2) throw ArgumentError("equivalence_system: n must be >= 2");
    std::vector<double> r(static_cast<std::size_t>(n) - 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
        KahanSum s;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const double x = d.points()[i];
            s.add(d.weights()[i] * psi(x) * std::pow(x, static_cast<double>(k)));
        }
        r[k] = s.value();
    }
    return r;
}

double cosine_weight_identity(int n, int k) {
    if (n < 2) throw ArgumentError("cosine_weight_identity: n must be >= 2");
    if (k < 0 || k > n - 2) throw ArgumentError("cosine_weight_identity: k must lie in [0, n-2]");
    const auto w = canonical_weights(n);
    KahanSum s;
    for (int i = 1; i <= n; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        // Reduce k*i mod 2n before the cosine to keep the argument small.
        const int phase = (k * i) % (2 * n);
        s.add(sign * std::cos(phase * std::numbers::pi / n) * w[static_cast<std::size_t>(i - 1)]);
    }
    return s.value();
}

AlternationReport alternation_check(const Design& d, const Polynomial& psi) {
    AlternationReport rep;
    rep.alternates = true;
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double v = psi(d.points()[i]);
        rep.values.push_back(v);
        hi = std::max(hi, std::abs(v));
        lo = std::min(lo, std::abs(v));
        if (i > 0 && !(v * rep.values[i - 1] < 0.0)) rep.alternates = false;
    }
    rep.spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
    if (hi == 0.0 || rep.spread > 1e-8) rep.alternates = false;
    return rep;
}

namespace {

// Newton on p' inside [lo, hi], bisection when a step leaves the bracket.
double polish_max(const Polynomial& dp, const Polynomial& ddp, double lo,
                  double hi, double x) {
    const bool bracket = dp(lo) * dp(hi) < 0.0;
    for (int it = 0; it < 60; ++it) {
        const double g = dp(x);
        const double h = ddp(x);
        double next = (h != 0.0) ? x - g / h : x;
        if (!(next > lo && next < hi)) {
            if (!bracket) break;
            next = 0.5 * (lo + hi);
        }
        if (bracket) {
            if (dp(lo) * dp(next) <= 0.0) hi = next; else lo = next;
        }
        if (std::abs(next - x) <= 1e-15) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

}  // namespace

double global_inequality(const Polynomial& psi, double h) {
    constexpr int kScan = 2000;
    const Polynomial sq = psi * psi;
    const Polynomial dsq = sq.derivative();
    const Polynomial ddsq = dsq.derivative();
    std::vector<double> xs(kScan);
    std::vector<double> vs(kScan);
    for (int k = 0; k < kScan; ++k) {
        xs[static_cast<std::size_t>(k)] = -std::cos(k * std::numbers::pi / (kScan - 1));
        vs[static_cast<std::size_t>(k)] = sq(xs[static_cast<std::size_t>(k)]);
    }
    double best = std::max(sq(-1.0), sq(1.0));
    for (int k = 1; k + 1 < kScan; ++k) {
        const auto u = static_cast<std::size_t>(k);
        best = std::max(best, vs[u]);
        if (vs[u] >= vs[u - 1] && vs[u] >= vs[u + 1]) {
            const double x = polish_max(dsq, ddsq, xs[u - 1], xs[u + 1], xs[u]);
            best = std::max(best, sq(x));
        }
    }
    return best - h;
}

double global_inequality(const Design& d, const DiscriminationProblem& prob) {
    const Polynomial residual = prob.deviation_term() - best_l2_coefficients(d, prob);
    return global_inequality(residual, t_criterion(d, prob));
}

std::vector<Check> verify_design(const Design& d, int n, double b) {
    const auto prob = DiscriminationProblem::with_b(n, b);
    const bool closed = std::abs(b) <= critical_b(n);
    const Polynomial psi = closed ? closed_form_psi(n, b) : remez(n, b, 1e-13).error_polynomial();
    const double dev = sup_abs(psi);

    std::vector<Check> out;

    const auto r = equivalence_system(d, psi, n);
    double rmax = 0.0;
    for (double v : r) rmax = std::max(rmax, std::abs(v));
    out.push_back({"equivalence_system", rmax, 1e-10, rmax <= 1e-10});

    const auto ext = extremal_set(psi, 1e-9);
    double dist = 0.0;
    for (double x : d.points()) {
        double nearest = std::numeric_limits<double>::infinity();
        for (double e : ext) nearest = std::min(nearest, std::abs(x - e));
        dist = std::max(dist, nearest);
    }
    out.push_back({"support_on_extremal_set", dist, 1e-8, dist <= 1e-8});

    const auto alt = alternation_check(d, psi);
    out.push_back({"alternation", alt.spread, 1e-8, alt.alternates});

    const double crit = t_criterion(d, prob);
    const double rel = std::abs(crit - dev * dev) / (dev * dev);
    out.push_back({"criterion_equals_minimax", rel, 1e-8, rel <= 1e-8});

    const double margin = global_inequality(d, prob);
    out.push_back({"global_inequality", margin, 1e-8, margin <= 1e-8});
    return out;
}

std::string checks_to_json(const std::vector<Check>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance},
                       {"pass", c.pass}});
        all = all && c.pass;
    }
    nlohmann::json j{{"checks", arr}, {"all_pass", all}};
    return j.dump(2);
}

}  // namespace tdisc
