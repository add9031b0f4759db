#include "splab/series.hpp"

#include "splab/multiindex.hpp"
#include "splab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

using namespace splab;

namespace {

PowerSeriesPair random_series(int n, int cap, std::uint64_t seed,
                              double decay = 0.5) {
    auto rng = make_rng(seed, 1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    PowerSeriesPair f;
    f.dimension = n;
    f.degree_cap = cap;
    for (int k = 0; k <= cap; ++k)
        for (const MultiIndex& alpha : enumerate_degree(n, k)) {
            const double scale = std::pow(decay, k);
            f.set_a(alpha, std::polar(scale * unif(rng), 2 * M_PI * unif(rng)));
            if (k >= 1)
                f.set_b(alpha,
                        std::polar(scale * unif(rng), 2 * M_PI * unif(rng)));
        }
    return f;
}

// first-order Wirtinger derivative by central differences in x and y
cplx fd_wirtinger(const std::function<cplx(const cvec&)>& f, cvec z, int var,
                  bool conjugated, double h) {
    auto shift = [&](double dx, double dy) {
        cvec w = z;
        w[static_cast<std::size_t>(var)] += cplx(dx, dy);
        return f(w);
    };
    const cplx ddx = (shift(h, 0) - shift(-h, 0)) / (2 * h);
    const cplx ddy = (shift(0, h) - shift(0, -h)) / (2 * h);
    return conjugated ? 0.5 * (ddx + cplx(0, 1) * ddy)
                      : 0.5 * (ddx - cplx(0, 1) * ddy);
}

// nested first-order stencils realizing d^{|m|}/dz^m (or the conjugate)
cplx fd_partial(const PowerSeriesPair& fs, const cvec& z, const MultiIndex& m,
                bool conjugated, double h) {
    std::function<cplx(const cvec&)> fn = [&fs](const cvec& w) {
        return evaluate(fs, w);
    };
    for (int var = 0; var < m.dimension(); ++var)
        for (int rep = 0; rep < m[var]; ++rep) {
            auto prev = fn;
            fn = [prev, var, conjugated, h](const cvec& w) {
                return fd_wirtinger(prev, w, var, conjugated, h);
            };
        }
    return fn(z);
}

} // namespace

TEST_CASE("evaluate basic monomials") {
    PowerSeriesPair f;
    f.dimension = 2;
    f.degree_cap = 2;
    f.set_a(MultiIndex({1, 0}), 1.0);
    const cvec z{cplx(0.3, 0.1), cplx(0.9, 0.0)};
    CHECK(std::abs(evaluate(f, z) - cplx(0.3, 0.1)) < 1e-15);

    PowerSeriesPair g;
    g.dimension = 2;
    g.degree_cap = 2;
    g.set_b(MultiIndex({0, 1}), 1.0);
    const cvec w{cplx(0.0, 0.0), cplx(0.0, 0.2)};
    CHECK(std::abs(evaluate(g, w) - cplx(0.0, -0.2)) < 1e-15);

    CHECK_THROWS_AS(evaluate(f, cvec{cplx(0.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("b-part constants fold into the a side") {
    PowerSeriesPair f;
    f.dimension = 1;
    f.degree_cap = 1;
    f.set_b(MultiIndex({0}), cplx(0.5, 0.25));
    CHECK(f.b.empty());
    CHECK(std::abs(evaluate(f, cvec{cplx(0.0, 0.0)}) - cplx(0.5, -0.25)) <
          1e-15);
    f.validate();
}

TEST_CASE("partial_derivative monomial rule") {
    PowerSeriesPair f;
    f.dimension = 1;
    f.degree_cap = 2;
    f.set_a(MultiIndex({2}), 1.0);

    const PowerSeriesPair d1 = partial_derivative(f, MultiIndex({1}), false);
    REQUIRE(d1.a.size() == 1);
    CHECK(d1.a.begin()->first == MultiIndex({1}));
    CHECK(d1.a.begin()->second == cplx(2.0, 0.0));

    const PowerSeriesPair d3 = partial_derivative(f, MultiIndex({3}), false);
    CHECK(d3.a.empty());
    CHECK(d3.b.empty());
}

TEST_CASE("formal derivatives match nested finite differences") {
    auto rng = make_rng(99, 3);
    std::uniform_real_distribution<double> unif(-0.3, 0.3);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + trial % 2;
        const PowerSeriesPair f = random_series(n, 5, 100 + trial, 0.4);
        cvec z(static_cast<std::size_t>(n));
        for (auto& v : z)
            v = cplx(unif(rng), unif(rng));
        for (int var = 0; var < n; ++var) {
            for (int order = 1; order <= 3; ++order) {
                std::vector<int> mv(static_cast<std::size_t>(n), 0);
                mv[static_cast<std::size_t>(var)] = order;
                const MultiIndex m(mv);
                // nested stencils lose ~eps/h per level; the third level
                // needs the larger step to stay below 1e-6
                const double h = (order <= 2) ? 1e-4 : 1e-3;
                for (bool conj : {false, true}) {
                    const cplx exact =
                        evaluate(partial_derivative(f, m, conj), z);
                    const cplx approx = fd_partial(f, z, m, conj, h);
                    CHECK(std::abs(exact - approx) < 1e-6);
                }
            }
        }
        if (n == 2) {
            const MultiIndex m({1, 1});
            const cplx exact = evaluate(partial_derivative(f, m, false), z);
            const cplx approx = fd_partial(f, z, m, false, 1e-4);
            CHECK(std::abs(exact - approx) < 1e-6);
        }
    }
}

TEST_CASE("mixed derivatives commute exactly") {
    // dyadic coefficients keep every product exact in double precision
    PowerSeriesPair f;
    f.dimension = 2;
    f.degree_cap = 4;
    f.set_a(MultiIndex({2, 2}), cplx(0.75, -0.5));
    f.set_a(MultiIndex({3, 1}), cplx(-1.25, 0.25));
    f.set_b(MultiIndex({2, 2}), cplx(0.5, 0.125));

    for (bool conj : {false, true}) {
        const PowerSeriesPair two_step = partial_derivative(
            partial_derivative(f, MultiIndex({1, 0}), conj),
            MultiIndex({1, 1}), conj);
        const PowerSeriesPair one_step =
            partial_derivative(f, MultiIndex({2, 1}), conj);
        CHECK(two_step.a == one_step.a);
        CHECK(two_step.b == one_step.b);
    }
}

TEST_CASE("coefficient extraction round trip") {
    int shapes[][2] = {{1, 6}, {2, 5}, {3, 4}};
    int seed = 0;
    for (auto& shape : shapes) {
        for (int rep = 0; rep < 4; ++rep) {
            const int n = shape[0], cap = shape[1];
            const PowerSeriesPair f = random_series(n, cap, 500 + seed++);
            auto sample = [&f](const cvec& z) { return evaluate(f, z); };
            const PowerSeriesPair rec =
                extract_coefficients(sample, n, 0.7, cap, 4 * cap + 4);
            for (const auto& [alpha, c] : f.a) {
                const auto it = rec.a.find(alpha);
                REQUIRE(it != rec.a.end());
                CHECK(std::abs(it->second - c) < 1e-10);
            }
            for (const auto& [alpha, c] : f.b) {
                const auto it = rec.b.find(alpha);
                REQUIRE(it != rec.b.end());
                CHECK(std::abs(it->second - c) < 1e-10);
            }
        }
    }
}

TEST_CASE("extraction of explicit samples") {
    auto constant = [](const cvec&) { return cplx(0.3, -0.7); };
    const PowerSeriesPair c = extract_coefficients(constant, 2, 0.5, 2, 8);
    REQUIRE(c.a.size() == 1);
    CHECK(std::abs(c.a.begin()->second - cplx(0.3, -0.7)) < 1e-12);
    CHECK(c.b.empty());

    auto mixed = [](const cvec& z) { return z[0] + std::conj(z[1]); };
    const PowerSeriesPair m = extract_coefficients(mixed, 2, 0.5, 2, 8);
    REQUIRE(m.a.size() == 1);
    CHECK(m.a.begin()->first == MultiIndex({1, 0}));
    CHECK(std::abs(m.a.begin()->second - 1.0) < 1e-12);
    REQUIRE(m.b.size() == 1);
    CHECK(m.b.begin()->first == MultiIndex({0, 1}));
    CHECK(std::abs(m.b.begin()->second - 1.0) < 1e-12);

    CHECK_THROWS_AS(extract_coefficients(constant, 2, 0.5, 4, 8),
                    std::invalid_argument);
}

TEST_CASE("sup_norm_estimate reference values") {
    PluriharmonicMap f;
    f.domain_p = 2.0;
    f.codomain_p = 2.0;
    PowerSeriesPair c;
    c.dimension = 2;
    c.degree_cap = 1;
    c.set_a(MultiIndex({1, 0}), 1.0);
    f.components = {c};
    CHECK(sup_norm_estimate(f, 10000, 1) >= 1.0 - 1e-3);
    CHECK(sup_norm_estimate(f, 10000, 1) <= 1.0 + 1e-12);

    PluriharmonicMap g = f;
    g.components[0].a.clear();
    g.components[0].set_a(MultiIndex({0, 0}), cplx(0.3, 0.4));
    CHECK(sup_norm_estimate(g, 200, 1) == doctest::Approx(0.5).epsilon(1e-9));

    PluriharmonicMap h;
    h.domain_p = 1.0;
    h.codomain_p = 2.0;
    PowerSeriesPair prod;
    prod.dimension = 2;
    prod.degree_cap = 2;
    prod.set_a(MultiIndex({1, 1}), 1.0);
    h.components = {prod};
    const double est = sup_norm_estimate(h, 20000, 2);
    CHECK(est <= 0.25 + 1e-9);
    CHECK(est >= 0.25 * 0.99);
}

TEST_CASE("homogeneous_part_sup single term matches the monomial sup") {
    PowerSeriesPair f;
    f.dimension = 2;
    f.degree_cap = 2;
    f.set_a(MultiIndex({1, 1}), cplx(0.3, 0.4)); // modulus 1/2
    for (double p : {1.0, 2.0}) {
        const double expect = 0.5 * sup_monomial_pball(MultiIndex({1, 1}), p);
        const double est = homogeneous_part_sup(f, 2, p, 20000, 3);
        CHECK(est <= expect * 1.0001);
        CHECK(est >= expect * 0.98);
    }
    CHECK(homogeneous_part_sup(f, 1, 2.0, 100, 3) == 0.0);
}

TEST_CASE("random_pluriharmonic lands inside the target ball") {
    for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
        const PluriharmonicMap f = random_pluriharmonic(2, 2, 4, 0.6, seed);
        CHECK(sup_norm_estimate(f, 4000, seed + 1) <= 1.0 / 1.04);
    }

    RandomMapOptions real_opts;
    real_opts.codomain_real = true;
    const PluriharmonicMap u = random_pluriharmonic(2, 1, 3, 0.5, 7, real_opts);
    auto rng = make_rng(21, 0);
    std::uniform_real_distribution<double> unif(-0.6, 0.6);
    for (int i = 0; i < 40; ++i) {
        const cvec z{cplx(unif(rng), unif(rng)), cplx(unif(rng), unif(rng))};
        CHECK(std::abs(evaluate(u, z)[0].imag()) < 1e-12);
    }

    const PluriharmonicMap constant = random_pluriharmonic(2, 1, 3, 0.0, 9);
    const auto& comp = constant.components[0];
    CHECK(comp.b.empty());
    CHECK(comp.a.size() <= 1);
}

TEST_CASE("random_ph_plus stays in the class") {
    for (std::uint64_t seed : {3ULL, 4ULL, 5ULL}) {
        const PowerSeriesPair f = random_ph_plus(2, 4, 0.6, seed, 2.0);
        MultiIndex zero({0, 0});
        const auto it = f.a.find(zero);
        const double f0 = (it != f.a.end()) ? it->second.real() : 0.0;
        CHECK(f0 >= 0.0);
        if (it != f.a.end())
            CHECK(std::abs(it->second.imag()) < 1e-15);
        CHECK(sup_real_part_estimate(f, 2.0, 4000, seed + 50) <= 1.0 + 1e-12);
        CHECK(f.b.count(zero) == 0);
    }
}

TEST_CASE("series file format round trip") {
    const PowerSeriesPair f = random_series(2, 3, 77);
    std::stringstream buffer;
    write_series(buffer, f);
    const std::string text = buffer.str();
    CHECK(text.rfind("PHSERIES n=2 D=3", 0) == 0);

    std::stringstream in(text);
    const PowerSeriesPair g = read_series(in);
    CHECK(g.dimension == f.dimension);
    CHECK(g.degree_cap == f.degree_cap);
    CHECK(g.a == f.a); // 17 significant digits round-trip doubles exactly
    CHECK(g.b == f.b);

    std::stringstream bad("PHSERIES n=1 D=2\nA [0] 1.0 0.0\nX oops\n");
    CHECK_THROWS_WITH_AS(read_series(bad),
                         doctest::Contains("line 3"), std::runtime_error);
}
