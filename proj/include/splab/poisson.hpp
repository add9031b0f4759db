#ifndef SPLAB_POISSON_HPP
#define SPLAB_POISSON_HPP

#include "splab/bounds_report.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace splab {

using vec3 = std::array<double, 3>;

/// Boundary data |phi| <= 1 on the unit sphere S^2, fed to the Poisson
/// integral.
struct BoundaryDensity {
    std::function<double(const vec3&)> value;
    std::string label;
};

/// Product quadrature on S^2: Gauss-Legendre in cos(theta) times a uniform
/// azimuthal trapezoid. Weights sum to the sphere area 4*pi.
struct SphereGrid {
    std::vector<vec3> points;
    std::vector<double> weights;

    static SphereGrid make(int polar_count, int azimuth_count);
};

/// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

/// Poisson integral u(x) = (1/area) * Int (1-|x|^2)/|x-zeta|^3 phi(zeta).
/// Requires ||x||_2 < 1.
double poisson_eval(const BoundaryDensity& phi, const vec3& x,
                    const SphereGrid& grid);

/// Gradient of the Poisson integral via the differentiated kernel.
vec3 poisson_gradient(const BoundaryDensity& phi, const vec3& x,
                      const SphereGrid& grid);

/// The sharp directional constant C(x, iota) = Int |<grad_x P(x,.), iota>|:
/// the sup over |phi| <= 1 of |<grad u(x), iota>| is the L^1 norm of the
/// differentiated kernel (attained by the sign density).
double directional_constant(const vec3& x, const vec3& iota,
                            const SphereGrid& grid);

/// Harmonic-map gradient check against the Khavinson-type constant: the
/// components u_k = P[phi_k] form a map into the real l_p ball; LHS is
/// |grad ||u(x)||_p| assembled through the dual vector (or the directional
/// maximum when u(x) = 0), RHS is khavinson_constant(3, ||x||).
BoundCheckReport verify_thm0(const std::vector<BoundaryDensity>& phi,
                             const vec3& x, double p, const SphereGrid& grid);

/// Near-extremal boundary density tanh(<grad_x P(x,.), iota>/eps): a smooth
/// member of {|phi| <= 1} approaching the sign density as eps -> 0.
BoundaryDensity smoothed_sign_density(const vec3& x, const vec3& iota,
                                      double eps);

} // namespace splab

#endif
