#include "splab/bounds.hpp"

#include "splab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace splab {

double c_n_constant(int n) {
    if (n < 3)
        throw std::invalid_argument("c_n_constant: requires n >= 3");
    return 2.0 * std::exp(log_gamma((n + 2) / 2.0) - log_gamma(0.5) -
                          log_gamma((n - 1) / 2.0));
}

double khavinson_constant(int n, double r) {
    if (n < 3)
        throw std::invalid_argument("khavinson_constant: requires n >= 3");
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument(
            "khavinson_constant: requires 0 <= r < 1");

    const double shift = (n - 2.0) / n * r;
    const double theta0 = std::acos(shift);
    auto integrand = [n, r, shift](double t) {
        const double c = std::cos(t);
        const double s = std::sin(t);
        return std::abs(c - shift) * std::pow(s, n - 2.0) /
               std::pow(1.0 - 2.0 * r * c + r * r, (n - 2.0) / 2.0);
    };

    // panels: geometric clustering toward theta = 0 where the denominator
    // is smallest, a split exactly at the kink, uniform panels beyond it
    QuadratureSpec spec;
    spec.node_count = 64;
    for (int j = 10; j >= 1; --j)
        spec.split_points.push_back(theta0 * std::pow(0.5, j));
    spec.split_points.push_back(theta0);
    for (int j = 1; j < 6; ++j)
        spec.split_points.push_back(theta0 + (M_PI - theta0) * j / 6.0);

    const double integral = gauss_legendre(integrand, 0.0, M_PI, spec);
    return c_n_constant(n) / (1.0 - r * r) * integral;
}

double colonna_rhs(double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("colonna_rhs: requires 0 <= r < 1");
    return (4.0 / M_PI) / (1.0 - r * r);
}

double kalaj_vuorinen_rhs(double r, double s) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("kalaj_vuorinen_rhs: requires 0 <= r < 1");
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("kalaj_vuorinen_rhs: requires 0 <= s <= 1");
    return (4.0 / M_PI) * (1.0 - s * s) / (1.0 - r * r);
}

namespace {

std::vector<double> flatten_point(const cvec& z) {
    std::vector<double> pt;
    pt.reserve(2 * z.size());
    for (const cplx& v : z) {
        pt.push_back(v.real());
        pt.push_back(v.imag());
    }
    return pt;
}

} // namespace

PolydiscCheck polydisc_sp_check(const PluriharmonicView& f, const cvec& z) {
    if (static_cast<int>(z.size()) != f.domain_dim)
        throw std::invalid_argument("polydisc_sp_check: point dimension");
    double zinf = 0.0;
    for (const cplx& v : z)
        zinf = std::max(zinf, std::abs(v));
    if (!(zinf < 1.0))
        throw std::invalid_argument(
            "polydisc_sp_check: requires ||z||_inf < 1");

    const cvec w = f.value(z);
    const MapDerivatives d = f.derivatives(z);
    double weighted = 0.0, raw = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k)
        for (std::size_t j = 0; j < z.size(); ++j) {
            const double pair2 = std::norm(d.dz[k][j]) + std::norm(d.dzb[k][j]);
            const double wz = 1.0 - std::norm(z[j]);
            weighted += pair2 * wz * wz;
            raw += pair2;
        }
    double fn2 = 0.0;
    for (const cplx& v : w)
        fn2 += std::norm(v);

    PolydiscCheck out;
    out.sharp = make_report("thm3plus", flatten_point(z), weighted, 1.0 - fn2);
    const double winf = 1.0 - zinf * zinf;
    out.weak = make_report("thm3plus-weak", flatten_point(z), raw,
                           (1.0 - fn2) / (winf * winf));
    return out;
}

double higher_order_rhs_ball(int n, const MultiIndex& m, const cvec& z) {
    if (m.order() < 1)
        throw std::invalid_argument("higher_order_rhs_ball: |m| >= 1");
    if (m.dimension() != n || static_cast<int>(z.size()) != n)
        throw std::invalid_argument("higher_order_rhs_ball: dimensions");
    double z2 = 0.0;
    for (const cplx& v : z)
        z2 += std::norm(v);
    if (!(z2 < 1.0))
        throw std::invalid_argument(
            "higher_order_rhs_ball: requires ||z||_2 < 1");

    const int total = m.order();
    if (n == 1 && total == 1)
        return colonna_rhs(std::abs(z[0])); // reduces to the first-order bound
    double log_rhs = std::log(4.0 / M_PI) - total * std::log1p(-z2);
    if (n == 1) {
        log_rhs += log_gamma(total + 1.0) +
                   (total - 1.0) * std::log1p(std::abs(z[0]));
    } else {
        log_rhs += 0.5 * total * std::log(static_cast<double>(n)) +
                   log_binomial(n + total - 1, n - 1) +
                   log_gamma(total + 1.0);
        for (int j = 0; j < n; ++j)
            log_rhs += m[j] * std::log1p(std::abs(z[static_cast<std::size_t>(j)]));
    }
    return std::exp(log_rhs);
}

double higher_order_rhs_polydisc(const MultiIndex& m, const cvec& z,
                                 double re_f_z) {
    if (m.order() < 1)
        throw std::invalid_argument("higher_order_rhs_polydisc: |m| >= 1");
    if (m.dimension() != static_cast<int>(z.size()))
        throw std::invalid_argument("higher_order_rhs_polydisc: dimensions");
    double zinf = 0.0;
    for (const cplx& v : z)
        zinf = std::max(zinf, std::abs(v));
    if (!(zinf < 1.0))
        throw std::invalid_argument(
            "higher_order_rhs_polydisc: requires ||z||_inf < 1");
    if (re_f_z > 1.0)
        throw std::invalid_argument(
            "higher_order_rhs_polydisc: requires Re f(z) <= 1");

    const int total = m.order();
    const int support = m.support_size();
    double log_factor = std::log(2.0);
    for (int j = 0; j < m.dimension(); ++j)
        log_factor += log_gamma(m[j] + 1.0);
    log_factor += (total - support) * std::log1p(zinf) -
                  total * std::log1p(-zinf * zinf);
    return (1.0 - re_f_z) * std::exp(log_factor);
}

namespace {

double norm2(const cvec& z) {
    double s = 0.0;
    for (const cplx& v : z)
        s += std::norm(v);
    return std::sqrt(s);
}

BoundCheckReport coefficient_check_lem31(const PluriharmonicMap& f,
                                         double p) {
    if (f.nu() != 1)
        throw std::invalid_argument(
            "coeff-lem31 expects a scalar map into the disc (nu = 1)");
    const PowerSeriesPair& c = f.components.front();
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_lhs = 0.0, worst_rhs = 1.0;
    std::string worst_alpha = "-";
    auto scan = [&](const MultiIndex& alpha) {
        if (alpha.order() < 1)
            return;
        double lhs = 0.0;
        if (auto it = c.a.find(alpha); it != c.a.end())
            lhs += std::abs(it->second);
        if (auto it = c.b.find(alpha); it != c.b.end())
            lhs += std::abs(it->second);
        if (lhs == 0.0)
            return;
        // log_ratio / p with p = inf gives exponent 0, i.e. bound 4/pi
        const double rhs =
            (4.0 / M_PI) * std::exp(log_power_ratio(alpha) / p);
        if (rhs - lhs < worst_margin) {
            worst_margin = rhs - lhs;
            worst_lhs = lhs;
            worst_rhs = rhs;
            worst_alpha = alpha.to_string();
        }
    };
    for (const auto& [alpha, v] : c.a) {
        (void)v;
        scan(alpha);
    }
    for (const auto& [alpha, v] : c.b) {
        (void)v;
        scan(alpha);
    }
    if (!std::isfinite(worst_margin))
        return make_report("coeff-lem31", {}, 0.0, 4.0 / M_PI,
                           "no nonconstant coefficients");
    return make_report("coeff-lem31", {}, worst_lhs, worst_rhs,
                       "worst alpha " + worst_alpha);
}

} // namespace

BoundCheckReport run_check(const std::string& tag, const PluriharmonicMap& f,
                           const cvec& z, const CheckOptions& options) {
    f.validate();
    const double p = options.p;

    if (tag == "thm2plus" || tag == "thm1") {
        if (f.domain_p != 2.0)
            throw std::invalid_argument(
                tag + ": hypothesis violated: domain must be the l_2 ball");
        if (tag == "thm1" && !f.codomain_real)
            throw std::invalid_argument(
                "thm1: hypothesis violated: target must be the real ball");
        const PluriharmonicView view = make_view(f);
        const GradientEstimate est = directional_sup(
            view, z, p, options.direction_budget, options.seed);
        const double r = norm2(z);
        double rhs;
        std::string notes;
        if (tag == "thm2plus") {
            rhs = colonna_rhs(r);
        } else {
            const double s = norm_p(evaluate(f, z), p);
            rhs = kalaj_vuorinen_rhs(r, std::min(s, 1.0));
        }
        if (est.nonsmooth_branch)
            notes = "nonsmooth branch (||f(z)|| below switch level)";
        BoundCheckReport rep =
            make_report(tag, flatten_point(z), est.value, rhs, notes);
        return rep;
    }

    if (tag == "thm3plus") {
        if (!std::isinf(f.domain_p))
            throw std::invalid_argument(
                "thm3plus: hypothesis violated: domain must be the polydisc");
        if (f.codomain_p != 2.0)
            throw std::invalid_argument(
                "thm3plus: hypothesis violated: target must be the l_2 ball");
        return polydisc_sp_check(make_view(f), z).sharp;
    }

    if (tag == "thm4") {
        if (f.nu() != 1)
            throw std::invalid_argument(
                "thm4: hypothesis violated: scalar target required");
        if (f.domain_p != 2.0)
            throw std::invalid_argument(
                "thm4: hypothesis violated: domain must be the l_2 ball");
        if (!options.order)
            throw std::invalid_argument("thm4: derivative order required");
        const MultiIndex& m = *options.order;
        const PowerSeriesPair& comp = f.components.front();
        const cplx dm = evaluate(partial_derivative(comp, m, false), z);
        const cplx dmb = evaluate(partial_derivative(comp, m, true), z);
        const double lhs = std::abs(dm) + std::abs(dmb);
        const double rhs = higher_order_rhs_ball(comp.dimension, m, z);
        return make_report("thm4", flatten_point(z), lhs, rhs,
                           "m " + m.to_string());
    }

    if (tag == "thm2") {
        if (f.nu() != 1)
            throw std::invalid_argument(
                "thm2: hypothesis violated: scalar target required");
        if (!std::isinf(f.domain_p))
            throw std::invalid_argument(
                "thm2: hypothesis violated: domain must be the polydisc");
        if (!options.order)
            throw std::invalid_argument("thm2: derivative order required");
        const MultiIndex& m = *options.order;
        const PowerSeriesPair& comp = f.components.front();
        const cplx dh = evaluate(partial_derivative(comp, m, false), z);
        const cplx dg = std::conj(evaluate(partial_derivative(comp, m, true), z));
        const double lhs = std::abs(dh + dg);
        const double re_f = std::real(evaluate(comp, z));
        const double rhs = higher_order_rhs_polydisc(m, z, re_f);
        return make_report("thm2", flatten_point(z), lhs, rhs,
                           "m " + m.to_string());
    }

    if (tag == "coeff-lem31")
        return coefficient_check_lem31(f, p);

    if (tag == "coeff-lem0") {
        if (f.nu() != 1)
            throw std::invalid_argument("coeff-lem0: scalar class required");
        const PowerSeriesPair& c = f.components.front();
        MultiIndex zero(std::vector<int>(c.dimension, 0));
        double f0 = 0.0;
        if (auto it = c.a.find(zero); it != c.a.end())
            f0 = std::real(it->second);
        const double budget_rhs = 2.0 * (1.0 - f0);
        double worst_margin = std::numeric_limits<double>::infinity();
        double worst_lhs = 0.0, worst_rhs = budget_rhs;
        std::string note = "-";
        for (int k = 1; k <= c.degree_cap; ++k) {
            for (const MultiIndex& alpha : enumerate_degree(c.dimension, k)) {
                cplx sum = 0.0;
                if (auto it = c.a.find(alpha); it != c.a.end())
                    sum += it->second;
                if (auto it = c.b.find(alpha); it != c.b.end())
                    sum += it->second;
                if (sum == cplx(0.0, 0.0))
                    continue;
                const double lhs = std::abs(sum);
                const double rhs =
                    budget_rhs * std::exp(log_power_ratio(alpha) / p);
                if (rhs - lhs < worst_margin) {
                    worst_margin = rhs - lhs;
                    worst_lhs = lhs;
                    worst_rhs = rhs;
                    note = "worst alpha " + alpha.to_string();
                }
            }
            const double hs =
                homogeneous_part_sup(c, k, p, 600, options.seed + k);
            if (budget_rhs - hs < worst_margin) {
                worst_margin = budget_rhs - hs;
                worst_lhs = hs;
                worst_rhs = budget_rhs;
                note = "homogeneous part k=" + std::to_string(k);
            }
        }
        if (!std::isfinite(worst_margin))
            return make_report("coeff-lem0", {}, 0.0, budget_rhs,
                               "no nonconstant coefficients");
        return make_report("coeff-lem0", {}, worst_lhs, worst_rhs, note);
    }

    if (tag == "lem31ch") {
        if (f.nu() != 1)
            throw std::invalid_argument("lem31ch: scalar map required");
        const PowerSeriesPair& c = f.components.front();
        double worst = 0.0;
        int worst_k = 1;
        for (int k = 1; k <= c.degree_cap; ++k) {
            // sum over |alpha| = k of (|a|^2 + |b|^2) |z^alpha|^2,
            // maximized over the domain sphere (moduli only)
            std::vector<std::pair<MultiIndex, double>> weights;
            for (const MultiIndex& alpha : enumerate_degree(c.dimension, k)) {
                double wsum = 0.0;
                if (auto it = c.a.find(alpha); it != c.a.end())
                    wsum += std::norm(it->second);
                if (auto it = c.b.find(alpha); it != c.b.end())
                    wsum += std::norm(it->second);
                if (wsum > 0.0)
                    weights.emplace_back(alpha, wsum);
            }
            if (weights.empty())
                continue;
            auto objective = [&weights](const cvec& z) {
                double s = 0.0;
                for (const auto& [alpha, wgt] : weights) {
                    double mono2 = 1.0;
                    for (int j = 0; j < alpha.dimension(); ++j)
                        mono2 *= std::pow(std::norm(z[static_cast<std::size_t>(j)]),
                                          alpha[j]);
                    s += wgt * mono2;
                }
                return s;
            };
            const double v = maximize_on_boundary(objective, c.dimension, p,
                                                  400, options.seed + 7 * k);
            if (v > worst) {
                worst = v;
                worst_k = k;
            }
        }
        return make_report("lem31ch", {}, worst, 16.0 / (M_PI * M_PI),
                           "worst k=" + std::to_string(worst_k));
    }

    throw std::invalid_argument("run_check: unknown theorem tag '" + tag +
                                "'");
}

} // namespace splab
