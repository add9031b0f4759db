#ifndef SPLAB_SERIES_HPP
#define SPLAB_SERIES_HPP

#include "splab/multiindex.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

namespace splab {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Truncated coefficient maps of a scalar pluriharmonic function
/// f = h + conj(g) with h(z) = sum a_alpha z^alpha and
/// g(z) = sum b_alpha z^alpha, g(0) = 0. Stored indices all have
/// length = dimension and |alpha| <= degree_cap. A constant fed into the
/// b map is folded (conjugated) into a, preserving values.
struct PowerSeriesPair {
    int dimension = 1;
    int degree_cap = 0;
    std::map<MultiIndex, cplx> a;
    std::map<MultiIndex, cplx> b;

    void set_a(const MultiIndex& alpha, cplx value);
    void set_b(const MultiIndex& alpha, cplx value);
    void validate() const; // throws on a broken invariant
    void scale(cplx factor);
};

/// Vector of scalar pluriharmonic components sharing dimension and
/// degree cap, with the norms of the source and target balls attached.
/// domain_p / codomain_p use INFINITY for the sup norm.
struct PluriharmonicMap {
    std::vector<PowerSeriesPair> components;
    double domain_p = 2.0;
    double codomain_p = 2.0;
    bool codomain_real = false;

    int dimension() const;
    int nu() const { return static_cast<int>(components.size()); }
    void validate() const;
};

/// sum a_alpha z^alpha + conj(sum b_alpha z^alpha) over stored coefficients.
cplx evaluate(const PowerSeriesPair& f, const cvec& z);

cvec evaluate(const PluriharmonicMap& f, const cvec& z);

/// Formal Wirtinger derivative of order m. conjugated = false applies
/// d^{|m|}/dz^m (acts on a, clears b); conjugated = true yields
/// d^{|m|}/dzbar^m, represented by the differentiated b-part so that
/// evaluate() returns conj(d^m g).
PowerSeriesPair partial_derivative(const PowerSeriesPair& f,
                                   const MultiIndex& m, bool conjugated);

/// Coefficient recovery from point samples on the torus of polyradius r:
/// trapezoid sums of sample(r e^{i theta}) against e^{-i<alpha,theta>}
/// (and the conjugate phase for b), divided by r^{|alpha|}. Exact for
/// per-axis trigonometric degree < grid_per_axis; requires
/// grid_per_axis > 2 * degree_cap.
PowerSeriesPair
extract_coefficients(const std::function<cplx(const cvec&)>& sample,
                     int dimension, double polyradius, int degree_cap,
                     int grid_per_axis);

/// l_p norm of a complex vector; p = INFINITY gives the max modulus.
double norm_p(const cvec& w, double p);

/// Lower estimate of the sup of `objective` over the boundary of the unit
/// l_p ball in C^n (the torus |z_j| = 1 when p = inf): axis-aligned,
/// real-positive and random samples followed by local ascent with a
/// shrinking step. Deterministic per (budget, seed).
double maximize_on_boundary(const std::function<double(const cvec&)>& objective,
                            int n, double p, int budget, std::uint64_t seed);

/// Lower estimate of sup over the closed domain ball of ||f(z)||_codomain_p:
/// boundary samples (deterministic + axis + random per seed) followed by
/// local ascent. Deterministic for fixed (budget, seed).
double sup_norm_estimate(const PluriharmonicMap& f, int budget,
                         std::uint64_t seed);

/// Lower estimate of sup over the unit p-ball of
/// |sum_{|alpha|=k} (a_alpha + b_alpha) z^alpha|.
double homogeneous_part_sup(const PowerSeriesPair& f, int k, double p,
                            int budget, std::uint64_t seed);

/// Lower estimate of sup over the unit domain_p-ball of Re f(z).
double sup_real_part_estimate(const PowerSeriesPair& f, double domain_p,
                              int budget, std::uint64_t seed);

struct RandomMapOptions {
    double domain_p = 2.0;
    double codomain_p = 2.0;
    bool codomain_real = false;
};

/// Random coefficients with magnitudes scaled by decay^{|alpha|}, then the
/// whole map rescaled by 1/(1.05 * sup estimate) so the range lies inside
/// the open unit codomain ball. For a real codomain the components are
/// emitted with b = a termwise (real-valued evaluations). Reproducible
/// per seed.
PluriharmonicMap random_pluriharmonic(int n, int nu, int degree_cap,
                                      double decay, std::uint64_t seed,
                                      const RandomMapOptions& opts = {});

/// Random scalar member of the class { Re f <= 1, f(0) >= 0 real, b_0 = 0 }
/// on the unit domain_p-ball: a random pair is shifted and scaled so that
/// Re f <= 1 holds with estimator slack and f(0) is a drawn constant in
/// [0, 0.8].
PowerSeriesPair random_ph_plus(int n, int degree_cap, double decay,
                               std::uint64_t seed, double domain_p);

/// Text round-trip: header "PHSERIES n=<n> D=<D>", then one record per
/// coefficient, "A [alpha] re im" / "B [alpha] re im", 17 significant
/// digits.
void write_series(std::ostream& out, const PowerSeriesPair& f);
PowerSeriesPair read_series(std::istream& in);

} // namespace splab

#endif
