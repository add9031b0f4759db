#ifndef SPLAB_EXTREMALS_HPP
#define SPLAB_EXTREMALS_HPP

#include "splab/gradients.hpp"
#include "splab/series.hpp"

namespace splab {

/// Disc automorphism zeta -> (a + zeta)/(1 + conj(a) zeta), |a| < 1.
struct MobiusMap {
    cplx a;

    cplx operator()(cplx zeta) const;
    cplx inverse(cplx w) const;
    /// d/dzeta of the map
    cplx derivative(cplx zeta) const;
};

MobiusMap mobius(cplx a);

/// (2/pi) arctan(i(conj(zeta)-zeta)/(1-|zeta|^2)); the planar harmonic
/// Schwarz-Pick extremal. Real-valued in (-1,1); gradient 4/pi at 0.
double colonna_extremal(cplx zeta);

/// Wirtinger derivatives of colonna_extremal.
void colonna_derivatives(cplx zeta, cplx& dz, cplx& dzb);

/// Unitary (as rows) sending xi to (||xi||_2, 0, ..., 0); identity for xi=0.
std::vector<cvec> align_to_first_axis(const cvec& xi);

/// Ball automorphism phi(z) = diag(1, s, ..., s) U (z - xi) / (1 - <z,xi>),
/// s = sqrt(1 - ||xi||^2), U xi = ||xi|| e_1. Maps the unit l_2 ball onto
/// itself with phi(xi) = 0.
struct BallAutomorphism {
    cvec center;
    double s = 1.0;
    std::vector<cvec> unitary;

    cvec operator()(const cvec& z) const;
};

BallAutomorphism ball_automorphism(const cvec& xi);

/// Equality witness for the sharp gradient bound on the l_2 ball: first
/// component (colonna ∘ mobius(-||a||)) applied to (Uz)_1, the rest zero.
/// predicted = (4/pi)/(1-||a||_2^2) is the gradient of the p-norm at a.
struct Thm2PlusExtremal {
    PluriharmonicView map;
    cvec center;
    double predicted_gradient = 0.0;
};

Thm2PlusExtremal thm2plus_extremal(const cvec& a, int nu, double p);

/// One-variable series of (2/pi) arg((1+z^m)/(1-z^m)) truncated to the
/// first `terms` pairs: a and b carry -2i/(pi(2j-1)) at degree m(2j-1).
PowerSeriesPair fm_series(int m, int terms);

/// Closed form of the same function.
double fm_closed_form(int m, cplx z);

/// Tail bound for |evaluate(fm_series) - closed form| at radius r.
double fm_truncation_tail(int m, int terms, double r);

/// -2 z_k/(1 - z_k) truncated at degree D: a = -2 on j*e_k, j <= D.
PowerSeriesPair polydisc_extremal(int n, int k, int degree_cap);

/// Equality witness for the polydisc derivative-sum bound: first component
/// the disc automorphism (-a_1 + z_1)/(1 - conj(a_1) z_1), the rest zero.
PluriharmonicView thm3plus_extremal(const cvec& a, int nu);

} // namespace splab

#endif
