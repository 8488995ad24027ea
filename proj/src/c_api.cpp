#include "tdisc/tdisc.h"

#include "tdisc/closed_form.hpp"
#include "tdisc/continuation.hpp"
#include "tdisc/design.hpp"
#include "tdisc/error.hpp"
#include "tdisc/maximin.hpp"
#include "tdisc/power.hpp"
#include "tdisc/serialize.hpp"
#include "tdisc/uniform_approx.hpp"
#include "tdisc/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

struct tdisc_design {
    tdisc::Design value;
};

struct tdisc_approx {
    tdisc::BestApproxResult value;
};

namespace {

thread_local std::string g_last_error;

template <class F>
tdisc_status guarded(F&& body) {
    g_last_error.clear();
    try {
        body();
        return TDISC_OK;
    } catch (const tdisc::ArgumentError& e) {
        g_last_error = e.what();
        return TDISC_ERR_ARGUMENT;
    } catch (const tdisc::RegimeError& e) {
        g_last_error = e.what();
        return TDISC_ERR_REGIME;
    } catch (const tdisc::SolverError& e) {
        g_last_error = e.what();
        return TDISC_ERR_SOLVER;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return TDISC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TDISC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TDISC_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw tdisc::ArgumentError(std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_out(const std::vector<double>& v, double* out, std::size_t cap) {
    require(out, "output buffer");
    if (cap < v.size()) throw tdisc::ArgumentError("output buffer too small");
    std::copy(v.begin(), v.end(), out);
}

tdisc::ExactDesign exact_design(const double* points, const int* counts, std::size_t size) {
    require(points, "points");
    require(counts, "counts");
    return {std::vector<double>(points, points + size), std::vector<int>(counts, counts + size)};
}

}  // namespace

extern "C" {

const char* tdisc_version(void) { return "1.0.0"; }

const char* tdisc_last_error(void) { return g_last_error.c_str(); }

void tdisc_string_free(char* s) { std::free(s); }

tdisc_status tdisc_design_create(const double* points, const double* weights, size_t size,
                                 tdisc_design** out) {
    return guarded([&] {
        require(out, "out");
        require(points, "points");
        require(weights, "weights");
        *out = new tdisc_design{tdisc::Design(std::vector<double>(points, points + size),
                                              std::vector<double>(weights, weights + size))};
    });
}

tdisc_status tdisc_design_from_json(const char* text, tdisc_design** out) {
    return guarded([&] {
        require(out, "out");
        require(text, "text");
        *out = new tdisc_design{tdisc::design_from_json(text)};
    });
}

tdisc_status tdisc_design_from_csv(const char* text, tdisc_design** out) {
    return guarded([&] {
        require(out, "out");
        require(text, "text");
        *out = new tdisc_design{tdisc::design_from_csv(text)};
    });
}

void tdisc_design_free(tdisc_design* d) { delete d; }

size_t tdisc_design_size(const tdisc_design* d) { return d ? d->value.size() : 0; }

tdisc_status tdisc_design_points(const tdisc_design* d, double* out, size_t cap) {
    return guarded([&] {
        require(d, "design");
        copy_out(d->value.points(), out, cap);
    });
}

tdisc_status tdisc_design_weights(const tdisc_design* d, double* out, size_t cap) {
    return guarded([&] {
        require(d, "design");
        copy_out(d->value.weights(), out, cap);
    });
}

tdisc_status tdisc_design_to_json(const tdisc_design* d, char** out) {
    return guarded([&] {
        require(d, "design");
        require(out, "out");
        *out = dup_string(tdisc::design_to_json(d->value));
    });
}

tdisc_status tdisc_design_to_csv(const tdisc_design* d, char** out) {
    return guarded([&] {
        require(d, "design");
        require(out, "out");
        *out = dup_string(tdisc::design_to_csv(d->value));
    });
}

tdisc_status tdisc_critical_b(int n, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = tdisc::critical_b(n);
    });
}

tdisc_status tdisc_t_criterion(const tdisc_design* d, int n, double b, double scale, double* out) {
    return guarded([&] {
        require(d, "design");
        require(out, "out");
        *out = tdisc::t_criterion(d->value, tdisc::DiscriminationProblem::with_b(n, b, scale));
    });
}

tdisc_status tdisc_closed_form_design(int n, double b, double alpha, tdisc_design** out) {
    return guarded([&] {
        require(out, "out");
        if (b == 0.0) {
            *out = new tdisc_design{tdisc::zero_b_family(n, alpha).design};
        } else {
            *out = new tdisc_design{tdisc::t_optimal_design(n, b).design};
        }
    });
}

tdisc_status tdisc_bbar_limit(int n, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = tdisc::bbar_limit(n);
    });
}

tdisc_status tdisc_solve_at(int n, double bbar, double tol, tdisc_design** out, double* criterion) {
    return guarded([&] {
        require(out, "out");
        const auto s = tdisc::solve_at(n, bbar, tol);
        if (criterion) *criterion = tdisc::h_form(s);
        *out = new tdisc_design{s.design()};
    });
}

tdisc_status tdisc_trajectory_csv(int n, double bbar_min, double bbar_max, int steps, char** out) {
    return guarded([&] {
        require(out, "out");
        if (steps < 1) throw tdisc::ArgumentError("trajectory: steps must be >= 1");
        if (!(bbar_max >= bbar_min)) throw tdisc::ArgumentError("trajectory: bbar_max must be >= bbar_min");
        std::vector<double> grid;
        for (int k = 0; k < steps; ++k) {
            grid.push_back(steps == 1 ? bbar_min
                                      : bbar_min + (bbar_max - bbar_min) * k / (steps - 1));
        }
        grid.back() = steps == 1 ? bbar_min : bbar_max;
        *out = dup_string(tdisc::trajectory_csv(tdisc::trajectory(n, grid)));
    });
}

tdisc_status tdisc_maximin_design(int n, tdisc_interval_kind kind, double b0, tdisc_design** out) {
    return guarded([&] {
        require(out, "out");
        tdisc::RatioInterval interval = tdisc::RatioInterval::whole_line();
        switch (kind) {
        case TDISC_INTERVAL_ALL: break;
        case TDISC_INTERVAL_GEQ: interval = tdisc::RatioInterval::ray_up(b0); break;
        case TDISC_INTERVAL_LEQ: interval = tdisc::RatioInterval::ray_down(b0); break;
        default: throw tdisc::ArgumentError("maximin: unknown interval kind");
        }
        *out = new tdisc_design{tdisc::maximin_design(n, interval)};
    });
}

tdisc_status tdisc_r_value(int n, double b, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = tdisc::r_value(n, b);
    });
}

tdisc_status tdisc_remez(int n, double b, double tol, tdisc_approx** out) {
    return guarded([&] {
        require(out, "out");
        *out = new tdisc_approx{tdisc::remez(n, b, tol)};
    });
}

void tdisc_approx_free(tdisc_approx* a) { delete a; }

double tdisc_approx_deviation(const tdisc_approx* a) { return a ? a->value.deviation : NAN; }

int tdisc_approx_iterations(const tdisc_approx* a) { return a ? a->value.iterations : 0; }

size_t tdisc_approx_extremal_count(const tdisc_approx* a) {
    return a ? a->value.extremal_points.size() : 0;
}

tdisc_status tdisc_approx_extremal_points(const tdisc_approx* a, double* out, size_t cap) {
    return guarded([&] {
        require(a, "approx");
        copy_out(a->value.extremal_points, out, cap);
    });
}

tdisc_status tdisc_approx_coefficients(const tdisc_approx* a, double* out, size_t cap) {
    return guarded([&] {
        require(a, "approx");
        std::vector<double> c = a->value.approximant.coeffs();
        c.resize(static_cast<std::size_t>(a->value.n - 1), 0.0);
        copy_out(c, out, cap);
    });
}

tdisc_status tdisc_approx_to_json(const tdisc_approx* a, char** out) {
    return guarded([&] {
        require(a, "approx");
        require(out, "out");
        *out = dup_string(tdisc::approx_to_json(a->value));
    });
}

tdisc_status tdisc_verify_design(const tdisc_design* d, int n, double b, char** report, int* all_pass) {
    return guarded([&] {
        require(d, "design");
        require(report, "report");
        const auto checks = tdisc::verify_design(d->value, n, b);
        bool ok = true;
        for (const auto& c : checks) ok = ok && c.pass;
        if (all_pass) *all_pass = ok ? 1 : 0;
        *report = dup_string(tdisc::checks_to_json(checks));
    });
}

tdisc_status tdisc_power_table_csv(int reps, uint64_t seed, int workers, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = dup_string(tdisc::power_table_csv(tdisc::power_table(reps, seed, workers)));
    });
}

tdisc_status tdisc_power_analytic(const double* points, const int* counts, size_t size, double theta3,
                                  double level, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = tdisc::f_test_power_analytic(exact_design(points, counts, size), theta3, level);
    });
}

tdisc_status tdisc_power_mc(const double* points, const int* counts, size_t size, double theta3,
                            int reps, uint64_t seed, double level, double* estimate,
                            double* std_error) {
    return guarded([&] {
        require(estimate, "estimate");
        const auto r = tdisc::f_test_power_mc(exact_design(points, counts, size), theta3, reps, seed, level);
        *estimate = r.estimate;
        if (std_error) *std_error = r.std_error;
    });
}

const char* tdisc_rng_description(void) { return tdisc::rng_description().data(); }

}  // extern "C"
