// splab: evaluate sharp gradient/coefficient bounds for harmonic and
// pluriharmonic maps, run verification campaigns, explore Bohr radii.

#include "splab/bohr.hpp"
#include "splab/bounds.hpp"
#include "splab/campaign.hpp"
#include "splab/series.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

namespace {

double parse_p(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
        return std::numeric_limits<double>::infinity();
    const double p = std::stod(text);
    if (!(p >= 1.0))
        throw std::invalid_argument("p must satisfy p >= 1 (or 'inf')");
    return p;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_khavinson(int dim, double radius, const std::string& format) {
    const double cn = splab::c_n_constant(dim);
    const double constant = splab::khavinson_constant(dim, radius);
    if (format == "csv") {
        std::cout << "n,r,c_n,constant\n"
                  << dim << ',' << fmt17(radius) << ',' << fmt17(cn) << ','
                  << fmt17(constant) << "\n";
    } else {
        std::cout << "{\"n\":" << dim << ",\"r\":" << fmt17(radius)
                  << ",\"c_n\":" << fmt17(cn)
                  << ",\"constant\":" << fmt17(constant) << "}\n";
    }
    return 0;
}

int cmd_verify(const splab::CampaignConfig& config, const std::string& format) {
    const splab::CampaignOutcome outcome = splab::run_campaign(config);
    if (format == "csv")
        std::cout << splab::report_csv_header() << "\n";
    for (const splab::BoundCheckReport& rep : outcome.reports)
        std::cout << (format == "csv" ? splab::report_csv(rep)
                                      : splab::report_json(rep))
                  << "\n";
    if (!outcome.passed) {
        std::cerr << "violation: " << outcome.failure << "\n";
        return 1;
    }
    return 0;
}

int cmd_bohr_1d() {
    const splab::Bohr1dCertificate cert = splab::class_bohr_1d();
    std::cout << "{\"radius\":" << fmt17(cert.radius)
              << ",\"witness_radius\":" << fmt17(cert.witness_radius)
              << ",\"max_identity_error\":" << fmt17(cert.max_identity_error)
              << "}\n";
    const double rho = 1.0 / 3.0;
    for (int i = 0; i <= 9; ++i) {
        const double c = 0.1 * i;
        const double value = c + 2.0 * (1.0 - c) * rho / (1.0 - rho);
        std::cout << "{\"f0\":" << fmt17(c) << ",\"value_at_third\":"
                  << fmt17(value) << "}\n";
    }
    return 0;
}

int cmd_bohr_function(const std::string& file, double p,
                      const std::string& functional) {
    std::ifstream in(file);
    if (!in)
        throw std::invalid_argument("cannot open series file: " + file);
    const splab::PowerSeriesPair f = splab::read_series(in);
    const splab::BohrFunctional which =
        (functional == "sum") ? splab::BohrFunctional::sum_with_constant
                              : splab::BohrFunctional::abs_pair;
    const splab::BohrResult res = splab::bohr_radius_of(f, which, p, 1e-9);
    std::cout << "{\"radius\":" << fmt17(res.radius) << ",\"functional\":\""
              << res.functional_tag << "\",\"bracket\":["
              << fmt17(res.bracket_lo) << ',' << fmt17(res.bracket_hi)
              << "],\"evaluations\":" << res.evaluations << "}\n";
    return 0;
}

int cmd_bohr_bounds(int dim, double p) {
    const double lower = splab::lower_bound_radius(dim, p);
    const double upper = splab::upper_bound_radius(dim, p);
    std::cout << "{\"n\":" << dim << ",\"p\":"
              << (std::isinf(p) ? "\"inf\"" : fmt17(p))
              << ",\"lower\":" << fmt17(lower) << ",\"upper\":" << fmt17(upper)
              << ",\"ratio\":" << fmt17(upper / lower) << "}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp Schwarz-Pick bounds for pluriharmonic maps"};
    app.require_subcommand(1);

    // khavinson
    auto* khav = app.add_subcommand(
        "khavinson", "sharp harmonic gradient constant on the R^n ball");
    int khav_dim = 3;
    double khav_radius = 0.0;
    std::string khav_format = "json";
    khav->add_option("--dim", khav_dim, "ball dimension (n >= 3)")
        ->required();
    khav->add_option("--radius", khav_radius, "radius 0 <= r < 1")
        ->required();
    khav->add_option("--format", khav_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* verify = app.add_subcommand(
        "verify", "random-function campaign plus sharpness checks");
    splab::CampaignConfig config;
    std::string verify_p = "2";
    std::string verify_format = "json";
    double verify_tol = -1.0;
    verify->add_option("--theorem", config.theorem, "theorem tag")
        ->required()
        ->check(CLI::IsMember(splab::campaign_tags()));
    verify->add_option("--trials", config.trials, "trial count")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "campaign seed");
    verify->add_option("--n", config.n, "domain dimension");
    verify->add_option("--nu", config.nu, "target dimension");
    verify->add_option("--p", verify_p, "norm exponent (or 'inf')");
    verify->add_option("--degree", config.degree_cap, "series degree cap");
    verify->add_option("--tol", verify_tol, "margin tolerance override");
    verify->add_option("--format", verify_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // bohr
    auto* bohr = app.add_subcommand("bohr", "Bohr radius computations");
    std::string bohr_mode = "1d";
    std::string bohr_p = "inf";
    int bohr_dim = 2;
    std::string bohr_series;
    std::string bohr_functional = "abs";
    bohr->add_option("--mode", bohr_mode, "1d|function|bounds")
        ->required()
        ->check(CLI::IsMember({"1d", "function", "bounds"}));
    bohr->add_option("--p", bohr_p, "norm exponent (or 'inf')");
    bohr->add_option("--dim", bohr_dim, "dimension for bounds mode");
    bohr->add_option("--series", bohr_series, "series file (function mode)");
    bohr->add_option("--functional", bohr_functional, "abs|sum")
        ->check(CLI::IsMember({"abs", "sum"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (khav->parsed())
            return cmd_khavinson(khav_dim, khav_radius, khav_format);
        if (verify->parsed()) {
            config.p = parse_p(verify_p);
            if (verify_tol >= 0.0) {
                config.tolerance = verify_tol;
            } else if (const char* env = std::getenv("SPLAB_DEFAULT_TOL")) {
                config.tolerance = std::stod(env);
            }
            return cmd_verify(config, verify_format);
        }
        if (bohr->parsed()) {
            const double p = parse_p(bohr_p);
            if (bohr_mode == "1d")
                return cmd_bohr_1d();
            if (bohr_mode == "function") {
                if (bohr_series.empty())
                    throw std::invalid_argument(
                        "function mode requires --series FILE");
                return cmd_bohr_function(bohr_series, p, bohr_functional);
            }
            return cmd_bohr_bounds(bohr_dim, p);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
