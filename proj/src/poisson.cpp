#include "splab/poisson.hpp"

#include "splab/bounds.hpp"
#include "splab/gradients.hpp"
#include "splab/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace splab {

namespace {

double dot3(const vec3& a, const vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double len3(const vec3& a) { return std::sqrt(dot3(a, a)); }

void require_interior(const vec3& x, const char* who) {
    if (!(len3(x) < 1.0))
        throw std::invalid_argument(std::string(who) +
                                    ": requires ||x||_2 < 1");
}

} // namespace

SphereGrid SphereGrid::make(int polar_count, int azimuth_count) {
    if (polar_count < 2 || azimuth_count < 2)
        throw std::invalid_argument("SphereGrid: counts must be >= 2");
    std::vector<double> t_nodes, t_weights;
    gauss_legendre_rule(polar_count, t_nodes, t_weights);

    SphereGrid grid;
    grid.points.reserve(static_cast<std::size_t>(polar_count) *
                        static_cast<std::size_t>(azimuth_count));
    grid.weights.reserve(grid.points.capacity());
    const double dphi = 2.0 * M_PI / azimuth_count;
    for (int i = 0; i < polar_count; ++i) {
        const double t = t_nodes[static_cast<std::size_t>(i)]; // cos(theta)
        const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
        for (int j = 0; j < azimuth_count; ++j) {
            const double phi = dphi * j;
            grid.points.push_back(
                {s * std::cos(phi), s * std::sin(phi), t});
            grid.weights.push_back(t_weights[static_cast<std::size_t>(i)] *
                                   dphi);
        }
    }
    return grid;
}

double sphere_area(int n) {
    if (n < 2)
        throw std::invalid_argument("sphere_area: requires n >= 2");
    return 2.0 * std::exp(0.5 * n * std::log(M_PI) - log_gamma(n / 2.0));
}

double poisson_eval(const BoundaryDensity& phi, const vec3& x,
                    const SphereGrid& grid) {
    require_interior(x, "poisson_eval");
    const double area = 4.0 * M_PI;
    const double one_minus = 1.0 - dot3(x, x);
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const vec3& zeta = grid.points[i];
        const vec3 diff{x[0] - zeta[0], x[1] - zeta[1], x[2] - zeta[2]};
        const double d = len3(diff);
        acc += grid.weights[i] * one_minus / (d * d * d) * phi.value(zeta);
    }
    return acc / area;
}

namespace {

vec3 kernel_gradient(const vec3& x, const vec3& zeta) {
    // grad_x [(1-|x|^2)/|x-zeta|^3]
    const vec3 diff{x[0] - zeta[0], x[1] - zeta[1], x[2] - zeta[2]};
    const double d = len3(diff);
    const double d3 = d * d * d;
    const double d5 = d3 * d * d;
    const double one_minus = 1.0 - dot3(x, x);
    vec3 g;
    for (int c = 0; c < 3; ++c)
        g[static_cast<std::size_t>(c)] =
            -2.0 * x[static_cast<std::size_t>(c)] / d3 -
            3.0 * one_minus * diff[static_cast<std::size_t>(c)] / d5;
    return g;
}

} // namespace

vec3 poisson_gradient(const BoundaryDensity& phi, const vec3& x,
                      const SphereGrid& grid) {
    require_interior(x, "poisson_gradient");
    const double area = 4.0 * M_PI;
    vec3 acc{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const vec3 g = kernel_gradient(x, grid.points[i]);
        const double wphi = grid.weights[i] * phi.value(grid.points[i]);
        acc[0] += wphi * g[0];
        acc[1] += wphi * g[1];
        acc[2] += wphi * g[2];
    }
    return {acc[0] / area, acc[1] / area, acc[2] / area};
}

double directional_constant(const vec3& x, const vec3& iota,
                            const SphereGrid& grid) {
    require_interior(x, "directional_constant");
    if (std::abs(len3(iota) - 1.0) > 1e-9)
        throw std::invalid_argument(
            "directional_constant: iota must be a unit vector");
    const double area = 4.0 * M_PI;
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.points.size(); ++i)
        acc += grid.weights[i] *
               std::abs(dot3(kernel_gradient(x, grid.points[i]), iota));
    return acc / area;
}

BoundaryDensity smoothed_sign_density(const vec3& x, const vec3& iota,
                                      double eps) {
    if (!(eps > 0))
        throw std::invalid_argument("smoothed_sign_density: eps > 0");
    BoundaryDensity phi;
    phi.label = "tanh sign density";
    // tanh saturates to 1.0 in doubles; the (1 - eps) factor keeps the
    // density strictly inside the admissible class
    const double scale = 1.0 - 1e-6;
    phi.value = [x, iota, eps, scale](const vec3& zeta) {
        return scale * std::tanh(dot3(kernel_gradient(x, zeta), iota) / eps);
    };
    return phi;
}

BoundCheckReport verify_thm0(const std::vector<BoundaryDensity>& phi,
                             const vec3& x, double p, const SphereGrid& grid) {
    if (phi.empty())
        throw std::invalid_argument("verify_thm0: nu >= 1 components");
    require_interior(x, "verify_thm0");
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("verify_thm0: requires p in (1,inf)");

    // boundary data must stay inside the open unit l_p ball on the grid
    for (const vec3& zeta : grid.points) {
        double s = 0.0;
        for (const auto& component : phi)
            s += std::pow(std::abs(component.value(zeta)), p);
        if (!(std::pow(s, 1.0 / p) < 1.0))
            throw std::invalid_argument(
                "verify_thm0: boundary data leaves the unit l_p ball");
    }

    const std::size_t nu = phi.size();
    cvec u(nu);
    std::vector<vec3> grads(nu);
    for (std::size_t k = 0; k < nu; ++k) {
        u[k] = poisson_eval(phi[k], x, grid);
        grads[k] = poisson_gradient(phi[k], x, grid);
    }

    double lhs = 0.0;
    std::string notes;
    if (norm_p(u, p) > 1e-12) {
        // |grad ||u||_p| = || Du(x)^T eta ||_2 through the dual vector
        const DualVector eta = dual_vector(u, p);
        double s2 = 0.0;
        for (int j = 0; j < 3; ++j) {
            double vj = 0.0;
            for (std::size_t k = 0; k < nu; ++k)
                vj += grads[k][static_cast<std::size_t>(j)] *
                      eta.entries[k].real();
            s2 += vj * vj;
        }
        lhs = std::sqrt(s2);
    } else {
        // u(x) = 0: maximize (sum_k |<grad u_k, v>|^p)^{1/p} over unit v
        notes = "nonsmooth branch (u(x) = 0)";
        auto objective = [&](const cvec& v) {
            vec3 dir{v[0].real(), v[1].real(), v[2].real()};
            const double len = len3(dir);
            if (len == 0.0)
                return 0.0;
            for (double& c : dir)
                c /= len;
            double s = 0.0;
            for (std::size_t k = 0; k < nu; ++k)
                s += std::pow(std::abs(dot3(grads[k], dir)), p);
            return std::pow(s, 1.0 / p);
        };
        lhs = maximize_on_boundary(objective, 3, 2.0, 600, 0x7710);
    }

    const double rhs = khavinson_constant(3, len3(x));
    BoundCheckReport rep = make_report("thm0", {x[0], x[1], x[2]}, lhs, rhs,
                                       notes);
    return rep;
}

} // namespace splab
