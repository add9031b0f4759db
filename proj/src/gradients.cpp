#include "splab/gradients.hpp"

#include "splab/rng.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace splab {

namespace {

constexpr double kZeroBranchLevel = 1e-12;

void require_gradient_exponent(double p) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument(
            "gradient functionals require p in (1,inf): the p-norm is not "
            "differentiable at p = 1 or p = inf");
}

} // namespace

DualVector dual_vector(const cvec& w, double p) {
    require_gradient_exponent(p);
    const double nrm = norm_p(w, p);
    if (nrm == 0.0)
        throw std::runtime_error(
            "dual_vector: degenerate dual at w = 0; use the "
            "norm-difference-quotient branch");
    DualVector eta;
    eta.q = p / (p - 1.0);
    eta.entries.resize(w.size());
    const double denom = std::pow(nrm, p - 1.0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double m = std::abs(w[k]);
        eta.entries[k] =
            (m == 0.0) ? cplx(0.0, 0.0) : std::pow(m, p - 2.0) * w[k] / denom;
    }
    return eta;
}

cplx dual_pairing(const cvec& w, const DualVector& eta) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k)
        s += w[k] * std::conj(eta.entries[k]);
    return s;
}

PluriharmonicView make_view(const PluriharmonicMap& f) {
    f.validate();
    struct Cache {
        PluriharmonicMap map;
        // da[k][j], db[k][j]: first-derivative series of component k in z_j
        std::vector<std::vector<PowerSeriesPair>> da, db;
    };
    auto cache = std::make_shared<Cache>();
    cache->map = f;
    const int n = f.dimension();
    const int nu = f.nu();
    cache->da.resize(static_cast<std::size_t>(nu));
    cache->db.resize(static_cast<std::size_t>(nu));
    for (int k = 0; k < nu; ++k) {
        for (int j = 0; j < n; ++j) {
            const MultiIndex ej = unit_index(n, j);
            cache->da[static_cast<std::size_t>(k)].push_back(
                partial_derivative(f.components[static_cast<std::size_t>(k)],
                                   ej, false));
            cache->db[static_cast<std::size_t>(k)].push_back(
                partial_derivative(f.components[static_cast<std::size_t>(k)],
                                   ej, true));
        }
    }

    PluriharmonicView view;
    view.domain_dim = n;
    view.codomain_dim = nu;
    view.domain_p = f.domain_p;
    view.codomain_p = f.codomain_p;
    view.codomain_real = f.codomain_real;
    view.value = [cache](const cvec& z) { return evaluate(cache->map, z); };
    view.derivatives = [cache, n, nu](const cvec& z) {
        MapDerivatives d;
        d.dz.assign(static_cast<std::size_t>(nu),
                    cvec(static_cast<std::size_t>(n)));
        d.dzb.assign(static_cast<std::size_t>(nu),
                     cvec(static_cast<std::size_t>(n)));
        for (int k = 0; k < nu; ++k)
            for (int j = 0; j < n; ++j) {
                d.dz[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    evaluate(cache->da[static_cast<std::size_t>(k)]
                                      [static_cast<std::size_t>(j)],
                             z);
                d.dzb[static_cast<std::size_t>(k)]
                     [static_cast<std::size_t>(j)] =
                    evaluate(cache->db[static_cast<std::size_t>(k)]
                                      [static_cast<std::size_t>(j)],
                             z);
            }
        return d;
    };
    return view;
}

double directional_derivative(const cvec& value, const MapDerivatives& deriv,
                              const cvec& theta, double p) {
    const std::size_t nu = deriv.dz.size();
    const std::size_t n = theta.size();
    cvec w_prime(nu, 0.0);
    for (std::size_t k = 0; k < nu; ++k) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += deriv.dz[k][j] * theta[j] +
                 deriv.dzb[k][j] * std::conj(theta[j]);
        w_prime[k] = s;
    }
    if (norm_p(value, p) < kZeroBranchLevel)
        return norm_p(w_prime, p);
    const DualVector eta = dual_vector(value, p);
    return std::real(dual_pairing(w_prime, eta));
}

namespace {

double ternary_max(const std::function<double(double)>& g, double lo,
                   double hi, int iterations) {
    for (int i = 0; i < iterations; ++i) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (g(m1) < g(m2))
            lo = m1;
        else
            hi = m2;
    }
    return g(0.5 * (lo + hi));
}

} // namespace

GradientEstimate grad_norm_1d(const PluriharmonicView& f, cplx z, double p) {
    require_gradient_exponent(p);
    if (f.domain_dim != 1)
        throw std::invalid_argument("grad_norm_1d: map must have n = 1");
    if (!(std::abs(z) < 1.0))
        throw std::invalid_argument("grad_norm_1d: requires |z| < 1");

    const cvec zs{z};
    const cvec w = f.value(zs);
    const MapDerivatives d = f.derivatives(zs);
    GradientEstimate est;

    if (norm_p(w, p) < kZeroBranchLevel) {
        est.nonsmooth_branch = true;
        auto slice = [&](double alpha) {
            const cplx ea = std::polar(1.0, alpha);
            cvec v(w.size());
            for (std::size_t k = 0; k < w.size(); ++k)
                v[k] = d.dz[k][0] * ea + d.dzb[k][0] * std::conj(ea);
            return norm_p(v, p);
        };
        const int grid = 4096;
        double best = -1.0;
        int best_i = 0;
        for (int i = 0; i < grid; ++i) {
            const double v = slice(2 * M_PI * i / grid);
            if (v > best) {
                best = v;
                best_i = i;
            }
        }
        const double step = 2 * M_PI / grid;
        est.value = ternary_max(slice, (best_i - 1) * step,
                                (best_i + 1) * step, 90);
        est.evaluations = grid + 91;
        return est;
    }

    const DualVector xi = dual_vector(w, p);
    cvec dfdz(w.size()), dfdzb(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        dfdz[k] = d.dz[k][0];
        dfdzb[k] = d.dzb[k][0];
    }
    const cplx pz = dual_pairing(dfdz, xi);
    const cplx pzb = dual_pairing(dfdzb, xi);
    const cplx norm_dz = 0.5 * (pz + std::conj(pzb));
    const cplx norm_dzb = 0.5 * (pzb + std::conj(pz));
    est.value = std::abs(norm_dz) + std::abs(norm_dzb);
    est.evaluations = 1;
    return est;
}

namespace {

// additive-recurrence low-discrepancy uniforms mapped to Gaussians
class QuasiGaussian {
  public:
    explicit QuasiGaussian(int dims) : state_(static_cast<std::size_t>(dims)) {
        static const double primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47, 53};
        for (std::size_t d = 0; d < state_.size(); ++d) {
            alpha_.push_back(
                std::sqrt(primes[d % (sizeof primes / sizeof *primes)]) *
                (1.0 + d / 16.0));
            alpha_.back() -= std::floor(alpha_.back());
            state_[d] = 0.5;
        }
    }

    void next(std::vector<double>& out) {
        out.resize(state_.size());
        for (std::size_t d = 0; d < state_.size(); ++d) {
            state_[d] += alpha_[d];
            state_[d] -= std::floor(state_[d]);
            out[d] = state_[d];
        }
        // Box-Muller on consecutive pairs
        for (std::size_t d = 0; d + 1 < out.size(); d += 2) {
            const double u1 = std::max(out[d], 1e-12);
            const double u2 = out[d + 1];
            const double r = std::sqrt(-2.0 * std::log(u1));
            out[d] = r * std::cos(2 * M_PI * u2);
            out[d + 1] = r * std::sin(2 * M_PI * u2);
        }
        if (out.size() % 2)
            out.back() = 2.0 * out.back() - 1.0;
    }

  private:
    std::vector<double> state_;
    std::vector<double> alpha_;
};

cvec to_unit_direction(const std::vector<double>& reals) {
    const std::size_t n = reals.size() / 2;
    cvec theta(n);
    double nrm = 0.0;
    for (double v : reals)
        nrm += v * v;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0)
        nrm = 1.0;
    for (std::size_t j = 0; j < n; ++j)
        theta[j] = cplx(reals[2 * j] / nrm, reals[2 * j + 1] / nrm);
    return theta;
}

} // namespace

GradientEstimate directional_sup(const PluriharmonicView& f, const cvec& z,
                                 double p, int direction_budget,
                                 std::uint64_t seed) {
    require_gradient_exponent(p);
    if (static_cast<int>(z.size()) != f.domain_dim)
        throw std::invalid_argument("directional_sup: point dimension");
    if (!(norm_p(z, f.domain_p) < 1.0))
        throw std::invalid_argument(
            "directional_sup: point must be interior to the domain ball");
    if (direction_budget < 1)
        throw std::invalid_argument("directional_sup: budget >= 1");

    const int n = f.domain_dim;
    const cvec w = f.value(z);
    const MapDerivatives d = f.derivatives(z);

    GradientEstimate est;
    est.nonsmooth_branch = norm_p(w, p) < kZeroBranchLevel;

    auto objective = [&](const cvec& theta) {
        ++est.evaluations;
        return std::abs(directional_derivative(w, d, theta, p));
    };

    double best = -1.0;
    cvec best_theta;
    auto consider = [&](const cvec& theta) {
        const double v = objective(theta);
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    };

    // coordinate directions (real and imaginary axes)
    for (int j = 0; j < n; ++j)
        for (double ph : {0.0, M_PI / 2}) {
            cvec theta(static_cast<std::size_t>(n), 0.0);
            theta[static_cast<std::size_t>(j)] = std::polar(1.0, ph);
            consider(theta);
        }

    QuasiGaussian qg(2 * n);
    std::vector<double> reals;
    for (int s = 0; s < direction_budget; ++s) {
        qg.next(reals);
        consider(to_unit_direction(reals));
    }

    auto rng = make_rng(seed, 0xd1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < 32; ++s) {
        std::vector<double> r(static_cast<std::size_t>(2 * n));
        for (double& v : r)
            v = gauss(rng);
        consider(to_unit_direction(r));
    }

    // local ascent on the direction sphere
    double step = 0.4;
    int refine_left = 4000 + 200 * n;
    while (step > 1e-9 && refine_left > 0) {
        bool improved = false;
        for (int t = 0; t < 2 * n + 4 && refine_left > 0; ++t, --refine_left) {
            cvec theta = best_theta;
            for (auto& v : theta)
                v += step * cplx(gauss(rng), gauss(rng));
            double nrm = 0.0;
            for (const auto& v : theta)
                nrm += std::norm(v);
            nrm = std::sqrt(nrm);
            if (nrm == 0.0)
                continue;
            for (auto& v : theta)
                v /= nrm;
            const double val = objective(theta);
            if (val > best) {
                best = val;
                best_theta = theta;
                improved = true;
            }
        }
        if (!improved)
            step *= 0.6;
    }

    est.value = best;
    return est;
}

} // namespace splab
