#include "splab/bohr.hpp"

#include "splab/extremals.hpp"
#include "splab/numerics.hpp"
#include "splab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace splab {

namespace {

struct Posynomial {
    int n = 1;
    std::vector<std::pair<MultiIndex, double>> terms; // coefficient >= 0
    double constant = 0.0;

    double value(const std::vector<double>& x) const {
        double s = constant;
        for (const auto& [alpha, c] : terms) {
            double mono = 1.0;
            for (int j = 0; j < n; ++j)
                mono *= std::pow(x[static_cast<std::size_t>(j)], alpha[j]);
            s += c * mono;
        }
        return s;
    }

    void gradient(const std::vector<double>& x, std::vector<double>& g) const {
        g.assign(static_cast<std::size_t>(n), 0.0);
        for (const auto& [alpha, c] : terms) {
            for (int j = 0; j < n; ++j) {
                if (alpha[j] == 0)
                    continue;
                double mono = alpha[j] * c;
                for (int l = 0; l < n; ++l) {
                    const int e = (l == j) ? alpha[l] - 1 : alpha[l];
                    mono *= std::pow(x[static_cast<std::size_t>(l)], e);
                }
                g[static_cast<std::size_t>(j)] += mono;
            }
        }
    }
};

// sup of a nonnegative-coefficient polynomial over {x >= 0, ||x||_p = rho}
double maximize_posynomial(const Posynomial& poly, double rho, double p,
                           int budget, std::uint64_t seed) {
    if (rho == 0.0)
        return poly.constant;
    if (poly.terms.empty())
        return poly.constant;
    const int n = poly.n;

    if (std::isinf(p)) {
        // coordinatewise monotone: the corner (rho,...,rho) is exact
        std::vector<double> x(static_cast<std::size_t>(n), rho);
        return poly.value(x);
    }
    if (n == 1) {
        std::vector<double> x{rho};
        return poly.value(x);
    }

    auto project = [&](std::vector<double>& x) {
        double s = 0.0;
        for (double v : x)
            s += std::pow(std::max(v, 0.0), p);
        s = std::pow(s, 1.0 / p);
        if (s == 0.0) {
            x.assign(static_cast<std::size_t>(n), 0.0);
            x[0] = rho;
            return;
        }
        for (double& v : x)
            v = std::max(v, 0.0) * rho / s;
    };

    double best = 0.0;
    auto consider = [&](const std::vector<double>& x) {
        best = std::max(best, poly.value(x));
    };

    // corners are KKT candidates the multiplicative iteration cannot reach
    for (int j = 0; j < n; ++j) {
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        x[static_cast<std::size_t>(j)] = rho;
        consider(x);
    }

    auto rng = make_rng(seed, 0x90);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    const int starts = std::max(2, budget / 40);
    std::vector<double> x, g, y;
    for (int s = 0; s < starts; ++s) {
        if (s == 0) {
            x.assign(static_cast<std::size_t>(n), 1.0);
        } else {
            x.resize(static_cast<std::size_t>(n));
            for (double& v : x)
                v = unif(rng);
        }
        project(x);
        consider(x);
        double prev = poly.value(x);
        for (int it = 0; it < 60; ++it) {
            poly.gradient(x, g);
            y.resize(static_cast<std::size_t>(n));
            bool degenerate = true;
            for (int j = 0; j < n; ++j) {
                const double w = x[static_cast<std::size_t>(j)] *
                                 g[static_cast<std::size_t>(j)];
                y[static_cast<std::size_t>(j)] =
                    (w > 0.0) ? std::pow(w, 1.0 / p) : 0.0;
                if (y[static_cast<std::size_t>(j)] > 0.0)
                    degenerate = false;
            }
            if (degenerate)
                break;
            x = y;
            project(x);
            const double cur = poly.value(x);
            consider(x);
            if (std::abs(cur - prev) < 1e-15 * (1.0 + cur))
                break;
            prev = cur;
        }
    }
    return best;
}

Posynomial abs_pair_majorant(const PowerSeriesPair& f) {
    Posynomial poly;
    poly.n = f.dimension;
    std::map<MultiIndex, double> acc;
    for (const auto& [alpha, c] : f.a)
        if (alpha.order() >= 1)
            acc[alpha] += std::abs(c);
    for (const auto& [alpha, c] : f.b)
        if (alpha.order() >= 1)
            acc[alpha] += std::abs(c);
    for (auto& [alpha, c] : acc)
        if (c > 0.0)
            poly.terms.emplace_back(alpha, c);
    return poly;
}

Posynomial sum_majorant(const PowerSeriesPair& f) {
    Posynomial poly;
    poly.n = f.dimension;
    std::map<MultiIndex, cplx> acc;
    for (const auto& [alpha, c] : f.a)
        acc[alpha] += c;
    for (const auto& [alpha, c] : f.b)
        acc[alpha] += c;
    for (auto& [alpha, c] : acc) {
        const double m = std::abs(c);
        if (m == 0.0)
            continue;
        if (alpha.order() == 0)
            poly.constant += m;
        else
            poly.terms.emplace_back(alpha, m);
    }
    return poly;
}

} // namespace

double majorant_abs_pair(const PowerSeriesPair& f, double rho, double p,
                         int budget, std::uint64_t seed) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("majorant_abs_pair: rho in [0,1)");
    return maximize_posynomial(abs_pair_majorant(f), rho, p, budget, seed);
}

double majorant_sum_with_constant(const PowerSeriesPair& f, double rho,
                                  double p, int budget, std::uint64_t seed) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("majorant_sum_with_constant: rho in [0,1)");
    return maximize_posynomial(sum_majorant(f), rho, p, budget, seed);
}

BohrResult bohr_radius_of(const PowerSeriesPair& f, BohrFunctional which,
                          double p, double tol,
                          const std::function<double(double)>& tail,
                          int budget, std::uint64_t seed) {
    if (!(tol > 0))
        throw std::invalid_argument("bohr_radius_of: tol > 0");
    const Posynomial poly = (which == BohrFunctional::abs_pair)
                                ? abs_pair_majorant(f)
                                : sum_majorant(f);
    BohrResult res;
    res.functional_tag = (which == BohrFunctional::abs_pair)
                             ? "abs-pair"
                             : "sum-with-constant";
    int evals = 0;
    auto functional = [&](double rho) {
        ++evals;
        double v = maximize_posynomial(poly, rho, p, budget, seed);
        if (tail)
            v += tail(rho);
        return v;
    };

    const double cap = 1.0 - 1e-9;
    if (functional(1e-12) > 1.0) {
        res.radius = 0.0;
        res.bracket_lo = res.bracket_hi = 0.0;
        res.evaluations = evals;
        res.note = "functional exceeds 1 already at rho -> 0+";
        return res;
    }
    if (functional(cap) <= 1.0) {
        res.radius = cap;
        res.bracket_lo = res.bracket_hi = cap;
        res.evaluations = evals;
        res.note = "functional never exceeds 1; radius capped";
        return res;
    }
    double lo = 0.0, hi = cap;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (functional(mid) <= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    res.radius = lo;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.evaluations = evals;
    return res;
}

Bohr1dCertificate class_bohr_1d() {
    Bohr1dCertificate cert;
    cert.radius = 1.0 / 3.0;
    // class majorant c + 2(1-c) rho/(1-rho) equals 1 exactly at rho = 1/3
    for (int i = 0; i <= 9; ++i) {
        const double c = 0.1 * i;
        const double rho = 1.0 / 3.0;
        const double value = c + 2.0 * (1.0 - c) * rho / (1.0 - rho);
        cert.max_identity_error =
            std::max(cert.max_identity_error, std::abs(value - 1.0));
    }
    static constexpr int depth = 200;
    const PowerSeriesPair extremal = polydisc_extremal(1, 1, depth);
    auto tail = [](double rho) {
        return 2.0 * std::pow(rho, depth + 1) / (1.0 - rho);
    };
    const BohrResult witness =
        bohr_radius_of(extremal, BohrFunctional::sum_with_constant,
                       std::numeric_limits<double>::infinity(), 1e-9, tail);
    cert.witness_radius = witness.radius;
    return cert;
}

double kk_series(double x) {
    if (!(x >= 0.0))
        throw std::invalid_argument("kk_series: x >= 0");
    if (x == 0.0)
        return 0.0;
    const double q = std::exp(1.0) * x; // asymptotic term ratio
    if (q >= 0.995)
        throw std::invalid_argument("kk_series: x too close to 1/e");
    double sum = 0.0, term = x; // k = 1
    for (int k = 1; k < 200000; ++k) {
        sum += term;
        const double tail_bound =
            (q < 1.0) ? term * q / (1.0 - q)
                      : std::numeric_limits<double>::infinity();
        if (term < 1e-14 && tail_bound < 1e-12)
            break;
        // t_{k+1} = t_k * x * ((k+1)/k)^k
        term *= x * std::pow((k + 1.0) / k, k);
    }
    return sum;
}

double solve_x0(double tol) {
    return bisect([](double x) { return kk_series(x) - M_PI / 4.0; }, 0.01,
                  0.36, tol);
}

double lower_bound_radius(int n, double p) {
    if (n < 1)
        throw std::invalid_argument("lower_bound_radius: n >= 1");
    if (!(p >= 1.0))
        throw std::invalid_argument("lower_bound_radius: p >= 1");
    if (p >= 2.0 || std::isinf(p))
        return M_PI / ((M_PI + 4.0 * std::sqrt(2.0)) * std::sqrt(n));
    return solve_x0() / std::pow(n, 1.0 - 1.0 / p);
}

double upper_bound_radius(int n, double p) {
    if (n < 2)
        throw std::invalid_argument("upper_bound_radius: n >= 2");
    if (!(p >= 1.0))
        throw std::invalid_argument("upper_bound_radius: p >= 1");
    const double exponent = 1.0 - 1.0 / std::min(p, 2.0);
    const int kmax =
        std::max(2, static_cast<int>(std::ceil(3.0 * std::log(n))));
    double best = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= kmax; ++k) {
        const double log_val =
            exponent * (log_gamma(k + 1.0) / k - std::log(n)) +
            std::log(32.0 * k * n * std::log(6.0 * k)) / (2.0 * k);
        best = std::min(best, std::exp(log_val));
    }
    return best;
}

} // namespace splab
