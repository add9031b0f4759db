#ifndef SPLAB_NUMERICS_HPP
#define SPLAB_NUMERICS_HPP

#include <functional>
#include <vector>

namespace splab {

/// Panel-based Gauss-Legendre quadrature. split_points mark interior
/// locations (typically kinks of |.|-type integrands) where the rule is
/// restarted so that each panel sees a smooth integrand.
struct QuadratureSpec {
    int node_count = 64;
    double tolerance = 1e-12;
    std::vector<double> split_points;
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
/// Results are cached per n; thread-safe.
void gauss_legendre_rule(int n, std::vector<double>& nodes,
                         std::vector<double>& weights);

/// Integrate f over [a,b], one Gauss-Legendre rule per panel between
/// consecutive split points. Throws std::invalid_argument on a >= b or
/// an out-of-range split point, std::runtime_error if f evaluates to a
/// non-finite value (the message names the offending node).
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, const QuadratureSpec& spec = {});

/// Integral of |cos(m*theta + gamma)| over [0, 2*pi], split at the 2m
/// interior zeros of the cosine. Equals 4 for every m >= 1 and gamma.
double abs_cos_integral(int m, double gamma, const QuadratureSpec& spec = {});

/// log(Gamma(x)) for x > 0, Lanczos approximation, relative error < 1e-13.
double log_gamma(double x);

/// Bisection on [lo,hi]; requires a sign change. Returns the bracket
/// midpoint once the bracket width is <= tol.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol);

} // namespace splab

#endif
