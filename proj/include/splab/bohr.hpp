#ifndef SPLAB_BOHR_HPP
#define SPLAB_BOHR_HPP

#include "splab/series.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace splab {

enum class BohrFunctional {
    abs_pair,          // sum (|a| + |b|) |z^alpha|, constant term excluded
    sum_with_constant, // sum |(a + b) z^alpha|, constant term included
};

struct BohrResult {
    double radius = 0.0;
    std::string functional_tag;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int evaluations = 0;
    std::string note; // set when the radius is degenerate (0) or capped
};

/// sup over ||z||_p <= rho of sum_{|alpha|>=1} (|a_alpha|+|b_alpha|) |z^alpha|.
/// The majorant has nonnegative coefficients, so the sup sits at nonnegative
/// real z with ||z||_p = rho; found by projected multiplicative ascent with
/// multi-start (exact corner evaluation for p = inf).
double majorant_abs_pair(const PowerSeriesPair& f, double rho, double p,
                         int budget, std::uint64_t seed);

/// Same with terms |a_alpha + b_alpha| and the constant term included.
double majorant_sum_with_constant(const PowerSeriesPair& f, double rho,
                                  double p, int budget, std::uint64_t seed);

/// Largest rho with functional(rho) <= 1, by bisection (the majorants are
/// nondecreasing in rho). Radius is capped at 1 - 1e-9 when the functional
/// never exceeds 1. `tail` (optional) adds a truncation-tail bound to the
/// functional before comparing with 1.
BohrResult bohr_radius_of(const PowerSeriesPair& f, BohrFunctional which,
                          double p, double tol,
                          const std::function<double(double)>& tail = {},
                          int budget = 400, std::uint64_t seed = 0xb04);

/// The exact one-variable class radius 1/3 with its certificate: the class
/// majorant value c + 2(1-c) rho/(1-rho) equals 1 at rho = 1/3 for every
/// constant term c in [0,1), checked on a grid, plus a bisection witness
/// from the geometric extremal.
struct Bohr1dCertificate {
    double radius = 1.0 / 3.0;
    double max_identity_error = 0.0; // worst |value at 1/3 - 1| on the grid
    double witness_radius = 0.0;     // bisection on the truncated extremal
};
Bohr1dCertificate class_bohr_1d();

/// S(x) = sum_{k>=1} k^k/k! x^k (converges for x < 1/e); terms are summed
/// until both the term and the geometric tail bound are negligible.
double kk_series(double x);

/// Root of S(x) = pi/4 on (0.01, 0.36); residual < 1e-10.
double solve_x0(double tol = 1e-12);

/// Class lower bound for the Bohr radius: pi/((pi+4 sqrt 2) sqrt n) for
/// p >= 2, x0 / n^{1-1/p} for p in [1,2).
double lower_bound_radius(int n, double p);

/// Upper bound min over k in [2, max(2, ceil(3 log n))] of
/// (k!^{1/k}/n)^{1-1/min(p,2)} (32 k n log(6k))^{1/(2k)}.
double upper_bound_radius(int n, double p);

} // namespace splab

#endif
