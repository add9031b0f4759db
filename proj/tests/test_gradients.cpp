#include "splab/gradients.hpp"

#include "splab/bounds.hpp"
#include "splab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace splab;

namespace {

PluriharmonicMap scaled_random_map(int n, int nu, int cap, std::uint64_t seed,
                                   double codomain_p, bool real_target) {
    RandomMapOptions opts;
    opts.codomain_p = codomain_p;
    opts.codomain_real = real_target;
    return random_pluriharmonic(n, nu, cap, 0.55, seed, opts);
}

} // namespace

TEST_CASE("dual vector normalization and pairing") {
    // p = 2: plain normalization
    const cvec w{cplx(3.0, 0.0), cplx(0.0, 4.0)};
    const DualVector eta2 = dual_vector(w, 2.0);
    CHECK(std::abs(eta2.entries[0] - cplx(0.6, 0.0)) < 1e-15);
    CHECK(std::abs(eta2.entries[1] - cplx(0.0, 0.8)) < 1e-15);

    // p = 4 at (1,1): the conjugate norm is exactly 1
    const DualVector eta4 = dual_vector(cvec{1.0, 1.0}, 4.0);
    CHECK(norm_p(eta4.entries, 4.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::real(dual_pairing(cvec{1.0, 1.0}, eta4)) ==
          doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-12));

    // single support
    const DualVector eta15 = dual_vector(cvec{1.0, 0.0}, 1.5);
    CHECK(std::abs(eta15.entries[0] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(eta15.entries[1]) < 1e-15);

    CHECK_THROWS_AS(dual_vector(cvec{0.0, 0.0}, 2.0), std::runtime_error);
    CHECK_THROWS_AS(dual_vector(cvec{1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        dual_vector(cvec{1.0}, std::numeric_limits<double>::infinity()),
        std::invalid_argument);
}

TEST_CASE("dual pairing recovers the p-norm for random vectors") {
    auto rng = make_rng(5, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double p : {1.2, 1.5, 2.0, 3.0, 7.0}) {
        for (int t = 0; t < 10; ++t) {
            cvec w(4);
            for (auto& v : w)
                v = cplx(gauss(rng), gauss(rng));
            const DualVector eta = dual_vector(w, p);
            const double q = p / (p - 1.0);
            CHECK(norm_p(eta.entries, q) ==
                  doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::real(dual_pairing(w, eta)) ==
                  doctest::Approx(norm_p(w, p)).epsilon(1e-10));
            CHECK(std::abs(std::imag(dual_pairing(w, eta))) < 1e-12);
        }
    }
}

TEST_CASE("grad_norm_1d on Re z hits the nonsmooth branch") {
    // f(z) = Re z = z/2 + conj(z)/2
    PowerSeriesPair f;
    f.dimension = 1;
    f.degree_cap = 1;
    f.set_a(MultiIndex({1}), 0.5);
    f.set_b(MultiIndex({1}), 0.5);
    PluriharmonicMap map;
    map.components = {f};
    map.codomain_real = true;
    for (double p : {1.5, 2.0, 4.0}) {
        const GradientEstimate est =
            grad_norm_1d(make_view(map), cplx(0.0, 0.0), p);
        CHECK(est.nonsmooth_branch);
        CHECK(est.value == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("grad_norm_1d matches directional_sup at a norm critical point") {
    // f(z) = (z, 1)/sqrt(2): the norm has a flat point at 0
    PowerSeriesPair c1, c2;
    c1.dimension = c2.dimension = 1;
    c1.degree_cap = c2.degree_cap = 1;
    c1.set_a(MultiIndex({1}), 1.0 / std::sqrt(2.0));
    c2.set_a(MultiIndex({0}), 1.0 / std::sqrt(2.0));
    PluriharmonicMap map;
    map.components = {c1, c2};
    const PluriharmonicView view = make_view(map);
    const GradientEstimate g1 = grad_norm_1d(view, cplx(0.0, 0.0), 2.0);
    const GradientEstimate g2 = directional_sup(view, {cplx(0.0, 0.0)}, 2.0,
                                                4096, 1);
    CHECK(std::abs(g1.value - g2.value) < 1e-8);
    CHECK(g1.value < 1e-8); // critical point of the norm
}

TEST_CASE("directional_sup reference values") {
    PowerSeriesPair id;
    id.dimension = 2;
    id.degree_cap = 1;
    id.set_a(MultiIndex({1, 0}), 1.0);
    PluriharmonicMap map;
    map.components = {id};
    const PluriharmonicView view = make_view(map);
    const GradientEstimate est =
        directional_sup(view, cvec{cplx(0, 0), cplx(0, 0)}, 2.0, 256, 2);
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-6));

    PowerSeriesPair c;
    c.dimension = 2;
    c.degree_cap = 0;
    c.set_a(MultiIndex({0, 0}), cplx(0.2, 0.1));
    PluriharmonicMap cmap;
    cmap.components = {c};
    CHECK(directional_sup(make_view(cmap), cvec{cplx(0, 0), cplx(0, 0)}, 2.0,
                          64, 3)
              .value < 1e-14);
}

TEST_CASE("estimators agree on random one-variable maps") {
    int point_seed = 900;
    for (int t = 0; t < 30; ++t) {
        const double p = (t % 3 == 0) ? 1.5 : (t % 3 == 1) ? 2.0 : 3.0;
        const int nu = 1 + t % 3;
        const PluriharmonicMap f =
            scaled_random_map(1, nu, 4, 4000 + t, p, false);
        const PluriharmonicView view = make_view(f);
        auto rng = make_rng(static_cast<std::uint64_t>(point_seed++), 0);
        std::uniform_real_distribution<double> unif(-0.6, 0.6);
        for (int i = 0; i < 10; ++i) {
            const cplx z(unif(rng), unif(rng));
            const double a = grad_norm_1d(view, z, p).value;
            const double b = directional_sup(view, {z}, p, 4096, 77).value;
            CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("gradient bound campaigns hold with margin") {
    auto rng = make_rng(31, 0);
    std::uniform_real_distribution<double> unif(-0.55, 0.55);
    for (int t = 0; t < 6; ++t) {
        const double p = (t % 2 == 0) ? 2.0 : 2.5;
        const PluriharmonicMap f =
            scaled_random_map(2, 2, 3, 6000 + t, p, false);
        const PluriharmonicView view = make_view(f);
        for (int i = 0; i < 4; ++i) {
            const cvec z{cplx(unif(rng), unif(rng)), cplx(unif(rng), unif(rng))};
            double r2 = 0.0;
            for (const auto& v : z)
                r2 += std::norm(v);
            const double lhs = directional_sup(view, z, p, 256, 5).value;
            CHECK(lhs <= colonna_rhs(std::sqrt(r2)) + 1e-8);
        }
    }
    for (int t = 0; t < 6; ++t) {
        const double p = (t % 2 == 0) ? 2.0 : 3.0;
        const PluriharmonicMap u = scaled_random_map(2, 2, 3, 7000 + t, p, true);
        const PluriharmonicView view = make_view(u);
        for (int i = 0; i < 4; ++i) {
            const cvec z{cplx(unif(rng), unif(rng)), cplx(unif(rng), unif(rng))};
            double r2 = 0.0;
            for (const auto& v : z)
                r2 += std::norm(v);
            const double s = norm_p(evaluate(u, z), p);
            const double lhs = directional_sup(view, z, p, 256, 5).value;
            CHECK(lhs <= kalaj_vuorinen_rhs(std::sqrt(r2), std::min(1.0, s)) +
                             1e-8);
        }
    }
}

TEST_CASE("real-valued maps: Wirtinger assembly matches the x/y route") {
    // for a real target the gradient can also be assembled from the real
    // partials du/dx = dz + dzb, du/dy = i (dz - dzb) paired with the dual
    // vector; both routes must agree
    auto rng = make_rng(640, 0);
    std::uniform_real_distribution<double> unif(-0.55, 0.55);
    for (int t = 0; t < 10; ++t) {
        const double p = (t % 2 == 0) ? 2.0 : 2.5;
        const PluriharmonicMap u = scaled_random_map(1, 3, 4, 8100 + t, p,
                                                     true);
        const PluriharmonicView view = make_view(u);
        for (int i = 0; i < 5; ++i) {
            const cplx z(unif(rng), unif(rng));
            const cvec w = view.value(cvec{z});
            if (norm_p(w, p) < 1e-9)
                continue;
            const MapDerivatives d = view.derivatives(cvec{z});
            const DualVector tau = dual_vector(w, p);
            cplx gx = 0.0, gy = 0.0;
            for (std::size_t k = 0; k < w.size(); ++k) {
                gx += (d.dz[k][0] + d.dzb[k][0]) * std::conj(tau.entries[k]);
                gy += cplx(0, 1) * (d.dz[k][0] - d.dzb[k][0]) *
                      std::conj(tau.entries[k]);
            }
            const double via_xy =
                std::sqrt(std::norm(gx.real()) + std::norm(gy.real()));
            const double via_wirtinger = grad_norm_1d(view, z, p).value;
            CHECK(via_wirtinger ==
                  doctest::Approx(via_xy).epsilon(1e-10));
        }
    }
}

TEST_CASE("interface rejects p outside (1,inf)") {
    const PluriharmonicMap f = scaled_random_map(1, 1, 2, 1, 2.0, false);
    const PluriharmonicView view = make_view(f);
    CHECK_THROWS_WITH_AS(grad_norm_1d(view, cplx(0, 0), 1.0),
                         doctest::Contains("not differentiable"),
                         std::invalid_argument);
    CHECK_THROWS_AS(directional_sup(view, {cplx(0, 0)},
                                    std::numeric_limits<double>::infinity(),
                                    16),
                    std::invalid_argument);
    CHECK_THROWS_AS(grad_norm_1d(view, cplx(1.5, 0), 2.0),
                    std::invalid_argument);
}
