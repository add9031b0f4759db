#ifndef SPLAB_GRADIENTS_HPP
#define SPLAB_GRADIENTS_HPP

#include "splab/series.hpp"

#include <cstdint>
#include <functional>

namespace splab {

/// First-order Wirtinger partials of a vector-valued pluriharmonic map at
/// one point: dz[k][j] = df_k/dz_j, dzb[k][j] = df_k/dzbar_j.
struct MapDerivatives {
    std::vector<cvec> dz;
    std::vector<cvec> dzb;
};

/// Point interface consumed by the gradient estimators: series-backed maps
/// and closed-form extremals both provide values and first partials.
struct PluriharmonicView {
    int domain_dim = 1;
    int codomain_dim = 1;
    double domain_p = 2.0;
    double codomain_p = 2.0;
    bool codomain_real = false;
    std::function<cvec(const cvec&)> value;
    std::function<MapDerivatives(const cvec&)> derivatives;
};

/// Series-backed view; first-derivative series are formed once and shared.
PluriharmonicView make_view(const PluriharmonicMap& f);

/// The l_q-unit vector pairing to ||w||_p, entries
/// |w_k|^{p-2} w_k / ||w||_p^{p-1} (0 where w_k = 0). Requires p in (1,inf)
/// and w != 0; a zero w throws (callers must use the norm-difference
/// branch there).
struct DualVector {
    cvec entries;
    double q;
};
DualVector dual_vector(const cvec& w, double p);

/// Hermitian pairing sum_k w_k conj(eta_k).
cplx dual_pairing(const cvec& w, const DualVector& eta);

struct GradientEstimate {
    double value = 0.0;
    bool nonsmooth_branch = false; // ||f(z)||_p fell below the switch level
    int evaluations = 0;
};

/// |d||f||_p/dz| + |d||f||_p/dzbar| for a one-variable map, from the dual
/// vector and the component partials; at f(z) = 0 the maximum over an
/// angular grid (with bracket refinement) of ||e^{ia} df + e^{-ia} dbarf||_p.
/// Requires p in (1,inf) and |z| < 1.
GradientEstimate grad_norm_1d(const PluriharmonicView& f, cplx z, double p);

/// Lower estimate of |grad ||f(z)||_p| as the max of analytic one-sided
/// directional derivatives over sampled real-2n unit directions
/// (low-discrepancy + coordinate + seeded random) with local ascent.
GradientEstimate directional_sup(const PluriharmonicView& f, const cvec& z,
                                 double p, int direction_budget,
                                 std::uint64_t seed = 0x5eed);

/// One-sided derivative of rho -> ||f(z + rho theta)||_p at rho = 0+ for a
/// real-2n direction theta (given as a complex vector with the real-2n
/// Euclidean norm 1). Exposed for tests.
double directional_derivative(const cvec& value, const MapDerivatives& deriv,
                              const cvec& theta, double p);

} // namespace splab

#endif
