// Command-line front end. Data goes to stdout, diagnostics to stderr; the
// exit code is the tdisc_status of the failing call.
#include <tdisc/tdisc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr const char* kOutputDirEnv = "TDISC_OUTPUT_DIR";

struct Failure {
    int code;
    std::string message;
};

void check(tdisc_status s) {
    if (s != TDISC_OK) throw Failure{static_cast<int>(s), tdisc_last_error()};
}

struct DesignDeleter {
    void operator()(tdisc_design* d) const { tdisc_design_free(d); }
};
struct ApproxDeleter {
    void operator()(tdisc_approx* a) const { tdisc_approx_free(a); }
};
struct StringDeleter {
    void operator()(char* s) const { tdisc_string_free(s); }
};
using DesignPtr = std::unique_ptr<tdisc_design, DesignDeleter>;
using ApproxPtr = std::unique_ptr<tdisc_approx, ApproxDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
    CString owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{TDISC_ERR_IO, "cannot open '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path resolve_output(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
            p = std::filesystem::path(dir) / p;
    }
    return p;
}

void write_file(const std::filesystem::path& p, const std::string& data) {
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Failure{TDISC_ERR_IO, "cannot write '" + p.string() + "'"};
    out << data;
    if (!out.flush()) throw Failure{TDISC_ERR_IO, "write failed for '" + p.string() + "'"};
}

nlohmann::json design_json(const tdisc_design* d) {
    char* raw = nullptr;
    check(tdisc_design_to_json(d, &raw));
    return nlohmann::json::parse(take(raw));
}

// "all", "geq:B0" or "leq:-B0"
void parse_interval(const std::string& text, tdisc_interval_kind& kind, double& b0) {
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || !std::isfinite(v))
            throw Failure{TDISC_ERR_ARGUMENT, "--interval: bad number '" + s + "'"};
        return v;
    };
    if (text == "all") {
        kind = TDISC_INTERVAL_ALL;
        b0 = 0;
    } else if (text.rfind("geq:", 0) == 0) {
        kind = TDISC_INTERVAL_GEQ;
        b0 = number(text.substr(4));
    } else if (text.rfind("leq:", 0) == 0) {
        kind = TDISC_INTERVAL_LEQ;
        b0 = -number(text.substr(4));
    } else {
        throw Failure{TDISC_ERR_ARGUMENT, "--interval must be all, geq:B0 or leq:-B0"};
    }
    if (b0 < 0) throw Failure{TDISC_ERR_ARGUMENT, "--interval: B0 must be >= 0"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"T-optimal discrimination designs for polynomial regression"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tdisc_version()));

    int n = 0;
    double b = 0;

    auto* critical = app.add_subcommand("critical", "critical ratio b* = n tan^2(pi/2n)");
    critical->add_option("--n", n, "degree of the larger model")->required();
    bool human = false;
    critical->add_flag("--human", human, "print 4 decimals instead of 17 significant digits");

    auto* design = app.add_subcommand("design", "closed-form T-optimal design");
    design->add_option("--n", n)->required();
    design->add_option("--b", b)->required();
    double alpha = 0.5;
    design->add_option("--alpha", alpha, "family member at b = 0, in [0, 1]")->capture_default_str();

    auto* trajectory = app.add_subcommand("trajectory", "continuation path in bbar = 1/b as CSV");
    double bbar_min = 0, bbar_max = 0;
    int steps = 0;
    std::string out_path;
    trajectory->add_option("--n", n)->required();
    trajectory->add_option("--bbar-min", bbar_min)->required();
    trajectory->add_option("--bbar-max", bbar_max)->required();
    trajectory->add_option("--steps", steps)->required();
    trajectory->add_option("--out", out_path, "CSV file (relative paths resolve under $TDISC_OUTPUT_DIR)")
        ->required();

    auto* maximin = app.add_subcommand("maximin", "maximin design over a range of b");
    std::string interval;
    maximin->add_option("--n", n)->required();
    maximin->add_option("--interval", interval, "all | geq:B0 | leq:-B0")->required();

    auto* verify = app.add_subcommand("verify", "optimality checks for a design file");
    std::string design_path;
    verify->add_option("--design", design_path, "design JSON (or CSV with point,weight)")->required();
    verify->add_option("--n", n)->required();
    verify->add_option("--b", b)->required();

    auto* remez = app.add_subcommand("remez", "best uniform approximation of x^n + b x^(n-1)");
    double tol = 1e-12;
    remez->add_option("--n", n)->required();
    remez->add_option("--b", b)->required();
    remez->add_option("--tol", tol)->capture_default_str();

    auto* power = app.add_subcommand("power", "Monte-Carlo power table for the cubic F-test");
    int reps = 100000;
    std::uint64_t seed = 20240229;
    int workers = 0;
    power->add_option("--reps", reps)->capture_default_str();
    power->add_option("--seed", seed)->capture_default_str();
    power->add_option("--workers", workers, "threads (0 = hardware concurrency); output is independent of it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return TDISC_ERR_ARGUMENT;
    }

    try {
        if (*critical) {
            double v = 0;
            check(tdisc_critical_b(n, &v));
            if (human) {
                std::printf("%.4f\n", v);
            } else {
                std::printf("%s\n", fmt17(v).c_str());
            }
        } else if (*design) {
            tdisc_design* raw = nullptr;
            const tdisc_status s = tdisc_closed_form_design(n, b, alpha, &raw);
            if (s == TDISC_ERR_REGIME) {
                throw Failure{s, std::string(tdisc_last_error()) +
                                     " (use `tdisc trajectory`)"};
            }
            check(s);
            DesignPtr d(raw);
            double crit = 0;
            check(tdisc_t_criterion(d.get(), n, b, 1.0, &crit));
            nlohmann::json j = design_json(d.get());
            j["n"] = n;
            j["b"] = b;
            if (b == 0) j["alpha"] = alpha;
            j["criterion"] = crit;
            std::cout << j.dump() << '\n';
        } else if (*trajectory) {
            char* raw = nullptr;
            check(tdisc_trajectory_csv(n, bbar_min, bbar_max, steps, &raw));
            const std::string csv = take(raw);
            const auto path = resolve_output(out_path);
            write_file(path, csv);
            std::fprintf(stderr, "wrote %d rows to %s\n", steps, path.string().c_str());
        } else if (*maximin) {
            tdisc_interval_kind kind{};
            double b0 = 0;
            parse_interval(interval, kind, b0);
            tdisc_design* raw = nullptr;
            check(tdisc_maximin_design(n, kind, b0, &raw));
            DesignPtr d(raw);
            nlohmann::json j = design_json(d.get());
            j["n"] = n;
            j["interval"] = interval;
            std::cout << j.dump() << '\n';
        } else if (*verify) {
            const std::string text = read_file(design_path);
            tdisc_design* raw = nullptr;
            const bool looks_json = text.find('{') != std::string::npos;
            check(looks_json ? tdisc_design_from_json(text.c_str(), &raw)
                             : tdisc_design_from_csv(text.c_str(), &raw));
            DesignPtr d(raw);
            char* report = nullptr;
            int all_pass = 0;
            check(tdisc_verify_design(d.get(), n, b, &report, &all_pass));
            std::cout << take(report) << '\n';
            if (!all_pass) std::fprintf(stderr, "verification: at least one check failed\n");
        } else if (*remez) {
            tdisc_approx* raw = nullptr;
            check(tdisc_remez(n, b, tol, &raw));
            ApproxPtr a(raw);
            char* js = nullptr;
            check(tdisc_approx_to_json(a.get(), &js));
            std::cout << take(js) << '\n';
            std::fprintf(stderr, "deviation %.4f after %d iterations\n", tdisc_approx_deviation(a.get()),
                         tdisc_approx_iterations(a.get()));
        } else if (*power) {
            if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
            std::fprintf(stderr, "rng: %s; seed %llu; reps %d; workers %d\n", tdisc_rng_description(),
                         static_cast<unsigned long long>(seed), reps, workers);
            char* raw = nullptr;
            check(tdisc_power_table_csv(reps, seed, workers, &raw));
            std::cout << take(raw);
        }
    } catch (const Failure& f) {
        std::fprintf(stderr, "tdisc: %s\n", f.message.c_str());
        return f.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "tdisc: %s\n", e.what());
        return TDISC_ERR_INTERNAL;
    }
    std::fflush(stdout);
    return 0;
}
