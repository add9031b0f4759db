#include "splab/extremals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace splab {

cplx MobiusMap::operator()(cplx zeta) const {
    return (a + zeta) / (1.0 + std::conj(a) * zeta);
}

cplx MobiusMap::inverse(cplx w) const {
    return (w - a) / (1.0 - std::conj(a) * w);
}

cplx MobiusMap::derivative(cplx zeta) const {
    const cplx denom = 1.0 + std::conj(a) * zeta;
    return (1.0 - std::norm(a)) / (denom * denom);
}

MobiusMap mobius(cplx a) {
    if (!(std::abs(a) < 1.0))
        throw std::invalid_argument("mobius: requires |a| < 1");
    return MobiusMap{a};
}

double colonna_extremal(cplx zeta) {
    if (!(std::abs(zeta) < 1.0))
        throw std::invalid_argument("colonna_extremal: requires |zeta| < 1");
    // i(conj(zeta)-zeta) = 2 Im zeta
    const double q = 2.0 * zeta.imag() / (1.0 - std::norm(zeta));
    return (2.0 / M_PI) * std::atan(q);
}

void colonna_derivatives(cplx zeta, cplx& dz, cplx& dzb) {
    const double denom = 1.0 - std::norm(zeta);
    const double q = 2.0 * zeta.imag() / denom;
    const cplx qz =
        cplx(0.0, -1.0) * (1.0 - std::conj(zeta) * std::conj(zeta)) /
        (denom * denom);
    const double scale = (2.0 / M_PI) / (1.0 + q * q);
    dz = scale * qz;
    dzb = std::conj(dz); // the function is real-valued
}

std::vector<cvec> align_to_first_axis(const cvec& xi) {
    const std::size_t n = xi.size();
    std::vector<cvec> u(n, cvec(n, 0.0));
    double nrm = 0.0;
    for (const cplx& v : xi)
        nrm += std::norm(v);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-300) {
        for (std::size_t j = 0; j < n; ++j)
            u[j][j] = 1.0;
        return u;
    }
    const cplx sign =
        (std::abs(xi[0]) == 0.0) ? cplx(1.0, 0.0) : xi[0] / std::abs(xi[0]);
    cvec v = xi;
    v[0] += sign * nrm;
    double vv = 0.0;
    for (const cplx& c : v)
        vv += std::norm(c);
    // H = I - 2 v v^H / (v^H v), then a diagonal phase fixes the sign of
    // the first row so that U xi = ||xi|| e_1 exactly.
    for (std::size_t r = 0; r < n; ++r) {
        const cplx row_phase = (r == 0) ? -std::conj(sign) : cplx(1.0, 0.0);
        for (std::size_t c = 0; c < n; ++c) {
            cplx h = (r == c) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            h -= 2.0 * v[r] * std::conj(v[c]) / vv;
            u[r][c] = row_phase * h;
        }
    }
    return u;
}

namespace {

cvec apply_rows(const std::vector<cvec>& m, const cvec& z) {
    cvec out(m.size(), 0.0);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < z.size(); ++c)
            out[r] += m[r][c] * z[c];
    return out;
}

} // namespace

cvec BallAutomorphism::operator()(const cvec& z) const {
    if (z.size() != center.size())
        throw std::invalid_argument("BallAutomorphism: dimension mismatch");
    cplx inner = 0.0;
    double nz = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        inner += z[j] * std::conj(center[j]);
        nz += std::norm(z[j]);
    }
    if (!(std::sqrt(nz) < 1.0))
        throw std::invalid_argument("BallAutomorphism: requires ||z|| < 1");
    cvec shifted(z.size());
    for (std::size_t j = 0; j < z.size(); ++j)
        shifted[j] = z[j] - center[j];
    cvec rotated = apply_rows(unitary, shifted);
    const cplx denom = 1.0 - inner;
    for (std::size_t j = 0; j < rotated.size(); ++j)
        rotated[j] *= ((j == 0) ? 1.0 : s) / denom;
    return rotated;
}

BallAutomorphism ball_automorphism(const cvec& xi) {
    double nrm2 = 0.0;
    for (const cplx& v : xi)
        nrm2 += std::norm(v);
    if (!(std::sqrt(nrm2) < 1.0))
        throw std::invalid_argument("ball_automorphism: requires ||xi|| < 1");
    BallAutomorphism phi;
    phi.center = xi;
    phi.s = std::sqrt(1.0 - nrm2);
    phi.unitary = align_to_first_axis(xi);
    return phi;
}

Thm2PlusExtremal thm2plus_extremal(const cvec& a, int nu, double p) {
    if (nu < 1)
        throw std::invalid_argument("thm2plus_extremal: nu >= 1");
    double nrm2 = 0.0;
    for (const cplx& v : a)
        nrm2 += std::norm(v);
    const double b1 = std::sqrt(nrm2);
    if (!(b1 < 1.0))
        throw std::invalid_argument("thm2plus_extremal: requires ||a|| < 1");

    const int n = static_cast<int>(a.size());
    auto unitary = align_to_first_axis(a);
    cvec first_row = unitary.empty() ? cvec{} : unitary[0];
    const MobiusMap phi = mobius(cplx(-b1, 0.0));

    Thm2PlusExtremal ext;
    ext.center = a;
    ext.predicted_gradient = (4.0 / M_PI) / (1.0 - nrm2);

    PluriharmonicView view;
    view.domain_dim = n;
    view.codomain_dim = nu;
    view.domain_p = 2.0;
    view.codomain_p = p;
    view.codomain_real = true;
    view.value = [first_row, phi, nu](const cvec& z) {
        cplx zeta = 0.0;
        for (std::size_t c = 0; c < z.size(); ++c)
            zeta += first_row[c] * z[c];
        cvec w(static_cast<std::size_t>(nu), 0.0);
        w[0] = colonna_extremal(phi(zeta));
        return w;
    };
    view.derivatives = [first_row, phi, nu, n](const cvec& z) {
        cplx zeta = 0.0;
        for (std::size_t c = 0; c < z.size(); ++c)
            zeta += first_row[c] * z[c];
        const cplx w = phi(zeta);
        cplx gw, gwb;
        colonna_derivatives(w, gw, gwb);
        const cplx dphi = phi.derivative(zeta);
        MapDerivatives d;
        d.dz.assign(static_cast<std::size_t>(nu),
                    cvec(static_cast<std::size_t>(n), 0.0));
        d.dzb.assign(static_cast<std::size_t>(nu),
                     cvec(static_cast<std::size_t>(n), 0.0));
        for (int j = 0; j < n; ++j) {
            d.dz[0][static_cast<std::size_t>(j)] =
                gw * dphi * first_row[static_cast<std::size_t>(j)];
            d.dzb[0][static_cast<std::size_t>(j)] =
                gwb * std::conj(dphi) *
                std::conj(first_row[static_cast<std::size_t>(j)]);
        }
        return d;
    };
    ext.map = view;
    return ext;
}

PowerSeriesPair fm_series(int m, int terms) {
    if (m < 1 || terms < 1)
        throw std::invalid_argument("fm_series: need m >= 1, terms >= 1");
    PowerSeriesPair f;
    f.dimension = 1;
    f.degree_cap = m * (2 * terms - 1);
    for (int j = 1; j <= terms; ++j) {
        const int deg = m * (2 * j - 1);
        const cplx coef(0.0, -2.0 / (M_PI * (2 * j - 1)));
        const MultiIndex alpha(std::vector<int>{deg});
        f.set_a(alpha, coef);
        f.set_b(alpha, coef);
    }
    return f;
}

double fm_closed_form(int m, cplx z) {
    if (!(std::abs(z) < 1.0))
        throw std::invalid_argument("fm_closed_form: requires |z| < 1");
    cplx zm = 1.0;
    for (int i = 0; i < m; ++i)
        zm *= z;
    return (2.0 / M_PI) * std::arg((1.0 + zm) / (1.0 - zm));
}

double fm_truncation_tail(int m, int terms, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("fm_truncation_tail: requires r in [0,1)");
    double tail = 0.0;
    for (int j = terms + 1;; ++j) {
        const double term =
            (4.0 / M_PI) / (2 * j - 1) * std::pow(r, m * (2 * j - 1));
        tail += term;
        if (term < 1e-18)
            break;
    }
    return tail;
}

PowerSeriesPair polydisc_extremal(int n, int k, int degree_cap) {
    if (k < 1 || k > n)
        throw std::invalid_argument("polydisc_extremal: need 1 <= k <= n");
    if (degree_cap < 1)
        throw std::invalid_argument("polydisc_extremal: need D >= 1");
    PowerSeriesPair f;
    f.dimension = n;
    f.degree_cap = degree_cap;
    for (int j = 1; j <= degree_cap; ++j) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k - 1)] = j;
        f.set_a(MultiIndex(std::move(e)), cplx(-2.0, 0.0));
    }
    return f;
}

PluriharmonicView thm3plus_extremal(const cvec& a, int nu) {
    if (nu < 1)
        throw std::invalid_argument("thm3plus_extremal: nu >= 1");
    for (const cplx& v : a)
        if (!(std::abs(v) < 1.0))
            throw std::invalid_argument(
                "thm3plus_extremal: requires ||a||_inf < 1");
    const int n = static_cast<int>(a.size());
    const cplx a1 = a[0];
    const MobiusMap psi = mobius(-a1);

    PluriharmonicView view;
    view.domain_dim = n;
    view.codomain_dim = nu;
    view.domain_p = std::numeric_limits<double>::infinity();
    view.codomain_p = 2.0;
    view.codomain_real = false;
    view.value = [psi, nu](const cvec& z) {
        cvec w(static_cast<std::size_t>(nu), 0.0);
        w[0] = psi(z[0]);
        return w;
    };
    view.derivatives = [psi, nu, n](const cvec& z) {
        MapDerivatives d;
        d.dz.assign(static_cast<std::size_t>(nu),
                    cvec(static_cast<std::size_t>(n), 0.0));
        d.dzb.assign(static_cast<std::size_t>(nu),
                     cvec(static_cast<std::size_t>(n), 0.0));
        d.dz[0][0] = psi.derivative(z[0]);
        return d;
    };
    return view;
}

} // namespace splab
