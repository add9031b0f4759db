#include "splab/bohr.hpp"

#include "splab/extremals.hpp"
#include "splab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace splab;

TEST_CASE("majorant of a single coefficient scales like the monomial sup") {
    PowerSeriesPair f;
    f.dimension = 2;
    f.degree_cap = 3;
    f.set_a(MultiIndex({2, 1}), cplx(0.0, 0.8));
    for (double p : {1.0, 2.0}) {
        for (double rho : {0.3, 0.6}) {
            const double expect = 0.8 *
                                  sup_monomial_pball(MultiIndex({2, 1}), p) *
                                  std::pow(rho, 3);
            const double got = majorant_abs_pair(f, rho, p, 400, 1);
            CHECK(got <= expect * 1.000001);
            CHECK(got >= expect * 0.99);
        }
    }
}

TEST_CASE("majorant exact cases") {
    const double inf = std::numeric_limits<double>::infinity();

    PowerSeriesPair zero;
    zero.dimension = 2;
    zero.degree_cap = 1;
    CHECK(majorant_abs_pair(zero, 0.5, inf, 100, 1) == 0.0);

    PowerSeriesPair c;
    c.dimension = 2;
    c.degree_cap = 0;
    c.set_a(MultiIndex({0, 0}), cplx(0.3, -0.4));
    CHECK(majorant_sum_with_constant(c, 0.5, inf, 100, 1) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(majorant_abs_pair(c, 0.5, inf, 100, 1) == 0.0);

    PowerSeriesPair lin;
    lin.dimension = 1;
    lin.degree_cap = 1;
    lin.set_a(MultiIndex({1}), 1.0);
    CHECK(majorant_sum_with_constant(lin, 0.37, 2.0, 100, 1) ==
          doctest::Approx(0.37).epsilon(1e-14));

    // polydisc extremal at p = inf: geometric series of the truncation
    const int depth = 40;
    const PowerSeriesPair pd = polydisc_extremal(2, 1, depth);
    const double rho = 0.25;
    const double expect =
        2.0 * rho * (1.0 - std::pow(rho, depth)) / (1.0 - rho);
    CHECK(majorant_sum_with_constant(pd, rho, inf, 100, 1) ==
          doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("majorants are nondecreasing in rho") {
    for (int t = 0; t < 5; ++t) {
        const PluriharmonicMap map =
            random_pluriharmonic(2, 1, 4, 0.6, 70 + t);
        const PowerSeriesPair& f = map.components.front();
        for (double p : {1.5, std::numeric_limits<double>::infinity()}) {
            double prev = -1.0;
            for (double rho = 0.05; rho < 0.95; rho += 0.1) {
                const double cur = majorant_abs_pair(f, rho, p, 200, 3);
                CHECK(cur >= prev - 1e-12);
                prev = cur;
            }
        }
    }
}

TEST_CASE("bohr radius of the geometric extremal is one third") {
    const int depth = 200;
    const PowerSeriesPair f = polydisc_extremal(1, 1, depth);
    auto tail = [depth](double rho) {
        return 2.0 * std::pow(rho, depth + 1) / (1.0 - rho);
    };
    const double inf = std::numeric_limits<double>::infinity();
    const BohrResult res = bohr_radius_of(
        f, BohrFunctional::sum_with_constant, inf, 1e-9, tail);
    CHECK(res.radius == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK(res.bracket_hi - res.bracket_lo <= 1e-9);

    // bracket consistency: admissible at the radius, not past the bracket
    CHECK(majorant_sum_with_constant(f, res.radius, inf, 400, 7) +
              tail(res.radius) <=
          1.0 + 1e-9);
    CHECK(majorant_sum_with_constant(f, res.bracket_hi, inf, 400, 7) +
              tail(res.bracket_hi) >
          1.0);
}

TEST_CASE("bohr radius caps and degenerate cases") {
    PowerSeriesPair zero;
    zero.dimension = 1;
    zero.degree_cap = 1;
    const BohrResult z =
        bohr_radius_of(zero, BohrFunctional::abs_pair, 2.0, 1e-9);
    CHECK(z.radius == doctest::Approx(1.0).epsilon(1e-6));

    PowerSeriesPair lin;
    lin.dimension = 1;
    lin.degree_cap = 1;
    lin.set_a(MultiIndex({1}), 1.0);
    const BohrResult l =
        bohr_radius_of(lin, BohrFunctional::abs_pair, 2.0, 1e-9);
    CHECK(l.radius == doctest::Approx(1.0).epsilon(1e-6));

    PowerSeriesPair big;
    big.dimension = 1;
    big.degree_cap = 0;
    big.set_a(MultiIndex({0}), cplx(1.2, 0.0));
    const BohrResult b =
        bohr_radius_of(big, BohrFunctional::sum_with_constant, 2.0, 1e-9);
    CHECK(b.radius == 0.0);
    CHECK(b.note.find("exceeds 1") != std::string::npos);
    CHECK(l.note.find("capped") != std::string::npos);
}

TEST_CASE("one-variable class certificate") {
    const Bohr1dCertificate cert = class_bohr_1d();
    CHECK(cert.radius == 1.0 / 3.0);
    CHECK(cert.max_identity_error <= 1e-14);
    CHECK(cert.witness_radius == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("power series root equation") {
    // independent partial-sum oracle at the reference point 1/(3 e^{1/3}):
    // k^k/k! x^k summed through k = 10 gives ~0.4973 and the geometric
    // tail adds ~0.0028, so the full sum sits at 1/2
    const double x_ref = 1.0 / (3.0 * std::cbrt(std::exp(1.0)));
    double partial = 0.0;
    double kk = 1.0, kfact = 1.0, xk = 1.0;
    for (int k = 1; k <= 10; ++k) {
        kk = 1.0;
        for (int i = 0; i < k; ++i)
            kk *= k;
        kfact *= k;
        xk *= x_ref;
        partial += kk / kfact * xk;
    }
    CHECK(partial == doctest::Approx(0.4973).epsilon(2e-4));
    CHECK(std::abs(kk_series(x_ref) - 0.5) < 1e-4);
    CHECK(kk_series(x_ref) - partial ==
          doctest::Approx(0.0028).epsilon(0.05));

    const double x0 = solve_x0(1e-12);
    CHECK(std::abs(kk_series(x0) - M_PI / 4.0) < 1e-10);
    CHECK(x0 > 0.238844);
    CHECK(x0 < 1.0 / std::exp(1.0));
}

TEST_CASE("lower bound radius closed forms") {
    const double denom = M_PI + 4.0 * std::sqrt(2.0);
    CHECK(lower_bound_radius(4, 2.0) ==
          doctest::Approx(M_PI / (denom * 2.0)).epsilon(1e-12));
    CHECK(lower_bound_radius(4, 2.0) == doctest::Approx(0.178529).epsilon(1e-5));
    CHECK(lower_bound_radius(1, 2.0) == doctest::Approx(0.357059).epsilon(1e-5));
    // p = 1: no dimension factor, just the root of the series equation
    CHECK(lower_bound_radius(16, 1.0) ==
          doctest::Approx(solve_x0()).epsilon(1e-12));
}

TEST_CASE("upper bound radius behavior") {
    const double inf = std::numeric_limits<double>::infinity();
    const double v2 = upper_bound_radius(2, inf);
    CHECK(v2 > 0.0);
    CHECK(std::isfinite(v2));

    double prev = upper_bound_radius(4, inf);
    for (int n : {16, 64, 256}) {
        const double cur = upper_bound_radius(n, inf);
        CHECK(cur < prev);
        prev = cur;
    }

    for (int n : {4, 16, 64, 256}) {
        const double ratio =
            upper_bound_radius(n, 2.0) / lower_bound_radius(n, 2.0);
        CHECK(ratio / std::sqrt(std::log(n)) < 10.0);
        CHECK(ratio > 0.0);
    }
}

TEST_CASE("class members dominate the class lower bound") {
    const double inf = std::numeric_limits<double>::infinity();
    const double class_bound = lower_bound_radius(2, inf);
    for (int t = 0; t < 20; ++t) {
        RandomMapOptions opts;
        opts.domain_p = inf;
        const PluriharmonicMap map =
            random_pluriharmonic(2, 1, 4, 0.6, 300 + t, opts);
        const BohrResult res = bohr_radius_of(map.components.front(),
                                              BohrFunctional::abs_pair, inf,
                                              1e-6);
        CHECK(res.radius >= class_bound - 1e-9);
    }
}
