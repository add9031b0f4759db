#ifndef SPLAB_BOUNDS_HPP
#define SPLAB_BOUNDS_HPP

#include "splab/bounds_report.hpp"
#include "splab/gradients.hpp"
#include "splab/multiindex.hpp"
#include "splab/series.hpp"

namespace splab {

/// c_n = 2 Gamma((n+2)/2) / (Gamma(1/2) Gamma((n-1)/2)), n >= 3.
double c_n_constant(int n);

/// The sharp gradient constant for bounded harmonic functions on the unit
/// ball of R^n at radius r:
///   c_n/(1-r^2) * Int_0^pi |cos t - (n-2)r/n| sin^{n-2}t
///                          / (1 - 2 r cos t + r^2)^{(n-2)/2} dt,
/// the kink split at t0 = arccos((n-2)r/n). Relative error < 1e-10.
double khavinson_constant(int n, double r);

/// (4/pi) / (1 - r^2).
double colonna_rhs(double r);

/// (4/pi) (1 - s^2) / (1 - r^2), s = ||u(z)||_p.
double kalaj_vuorinen_rhs(double r, double s);

struct PolydiscCheck {
    BoundCheckReport sharp; // weighted by (1-|z_k|^2)^2, sharp bound
    BoundCheckReport weak;  // weighted by (1-||z||_inf^2)^2
};

/// Weighted first-derivative sum on the polydisc against 1 - ||f(z)||_2^2,
/// partials taken from the view (exact for series-backed maps).
PolydiscCheck polydisc_sp_check(const PluriharmonicView& f, const cvec& z);

/// Arbitrary-order bound for maps of the l_2 ball into the disc:
/// n = 1:   (4/pi) m! (1+|z|)^{m-1} / (1-|z|^2)^m
/// n >= 2:  (4/pi) n^{|m|/2} C(n+|m|-1,n-1) |m|!
///          prod_j (1+|z_j|)^{m_j} / (1-||z||_2^2)^{|m|}.
double higher_order_rhs_ball(int n, const MultiIndex& m, const cvec& z);

/// Arbitrary-order polydisc bound for the class Re f <= 1:
/// 2 m! (1-Re f(z)) (1+||z||_inf)^{|m|-N} / (1-||z||_inf^2)^{|m|},
/// N = number of nonzero m_j.
double higher_order_rhs_polydisc(const MultiIndex& m, const cvec& z,
                                 double re_f_z);

struct CheckOptions {
    double p = 2.0;               // norm exponent where applicable
    int direction_budget = 384;   // directional_sup sampling budget
    std::uint64_t seed = 0x5eed;
    const MultiIndex* order = nullptr; // derivative order for thm4 / thm2
};

/// Single-check dispatcher. Tags: thm2plus, thm1, thm3plus, thm4, thm2,
/// coeff-lem31, coeff-lem0, lem31ch. Computes the matching LHS (gradient
/// estimator, coefficient scan, or exact series derivative) and RHS.
/// Throws std::invalid_argument naming the violated hypothesis when the
/// map does not fit the tagged theorem.
BoundCheckReport run_check(const std::string& theorem_tag,
                           const PluriharmonicMap& f, const cvec& z,
                           const CheckOptions& options = {});

} // namespace splab

#endif
