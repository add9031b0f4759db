#include "splab/series.hpp"

#include "splab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace splab {

void PowerSeriesPair::set_a(const MultiIndex& alpha, cplx value) {
    if (alpha.dimension() != dimension)
        throw std::invalid_argument("set_a: dimension mismatch");
    if (alpha.order() > degree_cap)
        throw std::invalid_argument("set_a: |alpha| exceeds degree cap");
    if (value == cplx(0.0, 0.0))
        a.erase(alpha);
    else
        a[alpha] = value;
}

void PowerSeriesPair::set_b(const MultiIndex& alpha, cplx value) {
    if (alpha.dimension() != dimension)
        throw std::invalid_argument("set_b: dimension mismatch");
    if (alpha.order() > degree_cap)
        throw std::invalid_argument("set_b: |alpha| exceeds degree cap");
    if (alpha.order() == 0) {
        // keep g(0) = 0: a constant contributes conj(value) to the a side
        if (value != cplx(0.0, 0.0)) {
            MultiIndex zero(std::vector<int>(dimension, 0));
            cplx cur = a.count(zero) ? a[zero] : cplx(0.0, 0.0);
            set_a(zero, cur + std::conj(value));
        }
        return;
    }
    if (value == cplx(0.0, 0.0))
        b.erase(alpha);
    else
        b[alpha] = value;
}

void PowerSeriesPair::validate() const {
    for (const auto& [alpha, c] : a) {
        (void)c;
        if (alpha.dimension() != dimension || alpha.order() > degree_cap)
            throw std::invalid_argument("PowerSeriesPair: bad a index");
    }
    for (const auto& [alpha, c] : b) {
        (void)c;
        if (alpha.dimension() != dimension || alpha.order() > degree_cap)
            throw std::invalid_argument("PowerSeriesPair: bad b index");
        if (alpha.order() == 0)
            throw std::invalid_argument("PowerSeriesPair: b has constant term");
    }
}

void PowerSeriesPair::scale(cplx factor) {
    for (auto& [alpha, c] : a)
        c *= factor;
    for (auto& [alpha, c] : b)
        c *= factor;
}

int PluriharmonicMap::dimension() const {
    if (components.empty())
        throw std::logic_error("PluriharmonicMap: no components");
    return components.front().dimension;
}

void PluriharmonicMap::validate() const {
    if (components.empty())
        throw std::invalid_argument("PluriharmonicMap: nu >= 1 required");
    const int n = components.front().dimension;
    const int cap = components.front().degree_cap;
    for (const auto& c : components) {
        c.validate();
        if (c.dimension != n || c.degree_cap != cap)
            throw std::invalid_argument(
                "PluriharmonicMap: components disagree on n or degree cap");
    }
}

namespace {

// powers[j][k] = z_j^k, k = 0..cap
std::vector<cvec> power_table(const cvec& z, int cap) {
    std::vector<cvec> powers(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        powers[j].resize(static_cast<std::size_t>(cap) + 1);
        powers[j][0] = 1.0;
        for (int k = 1; k <= cap; ++k)
            powers[j][static_cast<std::size_t>(k)] =
                powers[j][static_cast<std::size_t>(k) - 1] * z[j];
    }
    return powers;
}

cplx monomial(const std::vector<cvec>& powers, const MultiIndex& alpha) {
    cplx m = 1.0;
    for (int j = 0; j < alpha.dimension(); ++j)
        m *= powers[static_cast<std::size_t>(j)]
                   [static_cast<std::size_t>(alpha[j])];
    return m;
}

} // namespace

cplx evaluate(const PowerSeriesPair& f, const cvec& z) {
    if (static_cast<int>(z.size()) != f.dimension)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    const auto powers = power_table(z, f.degree_cap);
    cplx ha = 0.0, gb = 0.0;
    for (const auto& [alpha, c] : f.a)
        ha += c * monomial(powers, alpha);
    for (const auto& [alpha, c] : f.b)
        gb += c * monomial(powers, alpha);
    return ha + std::conj(gb);
}

cvec evaluate(const PluriharmonicMap& f, const cvec& z) {
    cvec w(f.components.size());
    for (std::size_t k = 0; k < f.components.size(); ++k)
        w[k] = evaluate(f.components[k], z);
    return w;
}

namespace {

// falling factorial prod_j alpha_j (alpha_j-1) ... (alpha_j - m_j + 1)
double derivative_factor(const MultiIndex& alpha, const MultiIndex& m) {
    double fac = 1.0;
    for (int j = 0; j < alpha.dimension(); ++j)
        for (int t = 0; t < m[j]; ++t)
            fac *= alpha[j] - t;
    return fac;
}

std::map<MultiIndex, cplx> differentiate_side(
    const std::map<MultiIndex, cplx>& coeffs, const MultiIndex& m) {
    std::map<MultiIndex, cplx> out;
    for (const auto& [alpha, c] : coeffs) {
        if (!m.dominated_by(alpha))
            continue;
        std::vector<int> shifted(static_cast<std::size_t>(alpha.dimension()));
        for (int j = 0; j < alpha.dimension(); ++j)
            shifted[static_cast<std::size_t>(j)] = alpha[j] - m[j];
        out[MultiIndex(std::move(shifted))] = c * derivative_factor(alpha, m);
    }
    return out;
}

} // namespace

PowerSeriesPair partial_derivative(const PowerSeriesPair& f,
                                   const MultiIndex& m, bool conjugated) {
    if (m.dimension() != f.dimension)
        throw std::invalid_argument("partial_derivative: m dimension mismatch");
    PowerSeriesPair out;
    out.dimension = f.dimension;
    out.degree_cap = std::max(0, f.degree_cap - m.order());
    if (!conjugated) {
        for (auto& [alpha, c] : differentiate_side(f.a, m))
            out.set_a(alpha, c);
    } else {
        for (auto& [alpha, c] : differentiate_side(f.b, m))
            out.set_b(alpha, c);
    }
    return out;
}

PowerSeriesPair
extract_coefficients(const std::function<cplx(const cvec&)>& sample,
                     int dimension, double polyradius, int degree_cap,
                     int grid_per_axis) {
    if (dimension < 1)
        throw std::invalid_argument("extract_coefficients: dimension >= 1");
    if (!(polyradius > 0 && polyradius < 1))
        throw std::invalid_argument(
            "extract_coefficients: polyradius must lie in (0,1)");
    if (grid_per_axis <= 2 * degree_cap)
        throw std::invalid_argument(
            "extract_coefficients: grid must exceed twice the degree cap "
            "(aliasing)");

    const int N = grid_per_axis;
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (int j = 0; j < dimension; ++j) {
            t *= static_cast<std::size_t>(N);
            if (t > (std::size_t{1} << 28))
                throw std::length_error("extract_coefficients: grid too large");
        }
        return t;
    }();

    // roots[r] = exp(-2 pi i r / N)
    cvec roots(static_cast<std::size_t>(N));
    for (int r = 0; r < N; ++r)
        roots[static_cast<std::size_t>(r)] =
            std::polar(1.0, -2.0 * M_PI * r / N);

    std::vector<cplx> values(total);
    std::vector<int> t(static_cast<std::size_t>(dimension), 0);
    cvec z(static_cast<std::size_t>(dimension));
    for (std::size_t idx = 0; idx < total; ++idx) {
        for (int j = 0; j < dimension; ++j)
            z[static_cast<std::size_t>(j)] = std::polar(
                polyradius, 2.0 * M_PI * t[static_cast<std::size_t>(j)] / N);
        values[idx] = sample(z);
        for (int j = dimension - 1; j >= 0; --j) {
            if (++t[static_cast<std::size_t>(j)] < N)
                break;
            t[static_cast<std::size_t>(j)] = 0;
        }
    }

    PowerSeriesPair out;
    out.dimension = dimension;
    out.degree_cap = degree_cap;

    for (int k = 0; k <= degree_cap; ++k) {
        for (const MultiIndex& alpha : enumerate_degree(dimension, k)) {
            cplx acc_a = 0.0, acc_b = 0.0;
            std::fill(t.begin(), t.end(), 0);
            for (std::size_t idx = 0; idx < total; ++idx) {
                long phase = 0;
                for (int j = 0; j < dimension; ++j)
                    phase += static_cast<long>(alpha[j]) *
                             t[static_cast<std::size_t>(j)];
                const cplx w = roots[static_cast<std::size_t>(phase % N)];
                acc_a += values[idx] * w;
                acc_b += values[idx] * std::conj(w);
                for (int j = dimension - 1; j >= 0; --j) {
                    if (++t[static_cast<std::size_t>(j)] < N)
                        break;
                    t[static_cast<std::size_t>(j)] = 0;
                }
            }
            const double scale =
                std::pow(polyradius, k) * static_cast<double>(total);
            const cplx ca = acc_a / scale;
            if (std::abs(ca) > 1e-13)
                out.set_a(alpha, ca);
            if (k >= 1) {
                const cplx cb = std::conj(acc_b / scale);
                if (std::abs(cb) > 1e-13)
                    out.set_b(alpha, cb);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// boundary maximization shared by the sup estimators

double norm_p(const cvec& w, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cplx& v : w)
            m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (const cplx& v : w)
        s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

namespace {

void project_boundary(cvec& z, double p) {
    const double nrm = norm_p(z, p);
    if (nrm <= 0) {
        z.assign(z.size(), 0.0);
        z[0] = 1.0;
        return;
    }
    for (cplx& v : z)
        v /= nrm;
}

} // namespace

double maximize_on_boundary(const std::function<double(const cvec&)>& objective,
                            int n, double p, int budget, std::uint64_t seed) {
    if (budget < 1)
        throw std::invalid_argument("maximize_on_boundary: budget >= 1");
    auto rng = make_rng(seed, 0xb0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const bool torus = std::isinf(p);

    auto random_point = [&](bool real_positive) {
        cvec z(static_cast<std::size_t>(n));
        if (torus) {
            for (auto& v : z)
                v = std::polar(1.0, real_positive ? 0.0 : 2 * M_PI * unif(rng));
        } else {
            for (auto& v : z) {
                const double mag = std::abs(gauss(rng));
                v = real_positive ? cplx(mag, 0.0)
                                  : std::polar(mag, 2 * M_PI * unif(rng));
            }
            project_boundary(z, p);
        }
        return z;
    };

    double best = -std::numeric_limits<double>::infinity();
    cvec best_z;
    auto consider = [&](const cvec& z) {
        const double v = objective(z);
        if (v > best) {
            best = v;
            best_z = z;
        }
    };

    // axis-aligned starts with a few phases each, a uniform positive point,
    // then the random/real-positive bulk
    static const double phases[4] = {0.0, M_PI / 2, M_PI, 3 * M_PI / 2};
    for (int j = 0; j < n; ++j) {
        for (double ph : phases) {
            cvec z(static_cast<std::size_t>(n), 0.0);
            z[static_cast<std::size_t>(j)] = std::polar(1.0, ph);
            if (torus)
                for (auto& v : z)
                    if (v == cplx(0.0, 0.0))
                        v = 1.0;
            consider(z);
        }
    }
    {
        cvec z(static_cast<std::size_t>(n),
               torus ? cplx(1.0, 0.0)
                     : cplx(std::pow(1.0 / n, 1.0 / p), 0.0));
        consider(z);
    }
    const int sample_budget = std::max(1, budget / 2);
    for (int s = 0; s < sample_budget; ++s)
        consider(random_point(s % 4 == 0));

    // local ascent with shrinking step
    int remaining = std::max(8, budget - sample_budget);
    double step = 0.35;
    while (step > 1e-9 && remaining > 0) {
        bool improved = false;
        const int probes = std::min(remaining, 2 * n + 4);
        for (int t = 0; t < probes; ++t) {
            cvec z = best_z;
            for (auto& v : z) {
                if (torus)
                    v *= std::polar(1.0, step * gauss(rng));
                else
                    v += step * cplx(gauss(rng), gauss(rng));
            }
            if (!torus)
                project_boundary(z, p);
            const double v = objective(z);
            --remaining;
            if (v > best) {
                best = v;
                best_z = z;
                improved = true;
            }
        }
        if (!improved)
            step *= 0.6;
    }
    return best;
}

double sup_norm_estimate(const PluriharmonicMap& f, int budget,
                         std::uint64_t seed) {
    f.validate();
    auto objective = [&f](const cvec& z) {
        return norm_p(evaluate(f, z), f.codomain_p);
    };
    return maximize_on_boundary(objective, f.dimension(), f.domain_p, budget,
                                seed);
}

double homogeneous_part_sup(const PowerSeriesPair& f, int k, double p,
                            int budget, std::uint64_t seed) {
    if (k < 1)
        throw std::invalid_argument("homogeneous_part_sup: requires k >= 1");
    PowerSeriesPair slice;
    slice.dimension = f.dimension;
    slice.degree_cap = std::min(k, f.degree_cap);
    for (const MultiIndex& alpha : enumerate_degree(f.dimension, k)) {
        cplx c = 0.0;
        if (auto it = f.a.find(alpha); it != f.a.end())
            c += it->second;
        if (auto it = f.b.find(alpha); it != f.b.end())
            c += it->second;
        if (c != cplx(0.0, 0.0))
            slice.set_a(alpha, c);
    }
    if (slice.a.empty())
        return 0.0;
    auto objective = [&slice](const cvec& z) {
        return std::abs(evaluate(slice, z));
    };
    return maximize_on_boundary(objective, f.dimension, p, budget, seed);
}

double sup_real_part_estimate(const PowerSeriesPair& f, double domain_p,
                              int budget, std::uint64_t seed) {
    auto objective = [&f](const cvec& z) {
        return std::real(evaluate(f, z));
    };
    return maximize_on_boundary(objective, f.dimension, domain_p, budget,
                                seed);
}

// ---------------------------------------------------------------------------
// generators

PluriharmonicMap random_pluriharmonic(int n, int nu, int degree_cap,
                                      double decay, std::uint64_t seed,
                                      const RandomMapOptions& opts) {
    if (n < 1 || nu < 1 || degree_cap < 0 || decay < 0)
        throw std::invalid_argument("random_pluriharmonic: bad arguments");
    PluriharmonicMap map;
    map.domain_p = opts.domain_p;
    map.codomain_p = opts.codomain_p;
    map.codomain_real = opts.codomain_real;
    map.components.resize(static_cast<std::size_t>(nu));

    auto rng = make_rng(seed, 0x5e);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (int c = 0; c < nu; ++c) {
        PowerSeriesPair& comp = map.components[static_cast<std::size_t>(c)];
        comp.dimension = n;
        comp.degree_cap = degree_cap;
        for (int k = 0; k <= degree_cap; ++k) {
            const double mag_scale = (k == 0) ? 1.0 : std::pow(decay, k);
            for (const MultiIndex& alpha : enumerate_degree(n, k)) {
                const double ra = mag_scale * (0.2 + 0.8 * unif(rng));
                const double pa = 2 * M_PI * unif(rng);
                const double rb = mag_scale * (0.2 + 0.8 * unif(rng));
                const double pb = 2 * M_PI * unif(rng);
                if (opts.codomain_real) {
                    // b = a termwise (with a real constant) keeps every
                    // evaluation real
                    const cplx ca = (k == 0) ? cplx(2 * ra - 1.0, 0.0)
                                             : std::polar(0.5 * ra, pa);
                    if (ca != cplx(0.0, 0.0))
                        comp.set_a(alpha, ca);
                    if (k >= 1 && ca != cplx(0.0, 0.0))
                        comp.set_b(alpha, ca);
                } else {
                    if (ra > 0)
                        comp.set_a(alpha, std::polar(ra, pa));
                    if (k >= 1 && rb > 0)
                        comp.set_b(alpha, std::polar(rb, pb));
                }
            }
        }
    }

    const double s =
        sup_norm_estimate(map, 1600, derive_seed(seed, 0xca1e));
    const double scale = 1.0 / (1.05 * std::max(s, 1e-300));
    for (auto& comp : map.components)
        comp.scale(scale);
    return map;
}

PowerSeriesPair random_ph_plus(int n, int degree_cap, double decay,
                               std::uint64_t seed, double domain_p) {
    RandomMapOptions opts;
    opts.domain_p = domain_p;
    PluriharmonicMap draft =
        random_pluriharmonic(n, 1, degree_cap, decay, seed, opts);
    PowerSeriesPair f = draft.components.front();
    // drop the constant, then shift into { Re <= 1 } with estimator slack
    MultiIndex zero(std::vector<int>(n, 0));
    f.a.erase(zero);

    const double s = sup_real_part_estimate(f, domain_p, 1600,
                                            derive_seed(seed, 0x9e2));
    const double safe = 1.05 * std::max(s, 0.0) + 1e-9;

    auto rng = make_rng(seed, 0x9e3);
    std::uniform_real_distribution<double> unif(0.0, 0.8);
    const double c0 = unif(rng);

    f.scale((1.0 - c0) / safe);
    f.set_a(zero, cplx(c0, 0.0));
    return f;
}

// ---------------------------------------------------------------------------
// serialization

static void write_cplx(std::ostream& out, const cplx& v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g %.17g", v.real(), v.imag());
    out << buf;
}

void write_series(std::ostream& out, const PowerSeriesPair& f) {
    out << "PHSERIES n=" << f.dimension << " D=" << f.degree_cap << "\n";
    for (const auto& [alpha, c] : f.a) {
        out << "A " << alpha.to_string() << ' ';
        write_cplx(out, c);
        out << "\n";
    }
    for (const auto& [alpha, c] : f.b) {
        out << "B " << alpha.to_string() << ' ';
        write_cplx(out, c);
        out << "\n";
    }
}

PowerSeriesPair read_series(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line))
        throw std::runtime_error("series: empty input (line 1)");
    ++lineno;
    int n = 0, cap = 0;
    if (std::sscanf(line.c_str(), "PHSERIES n=%d D=%d", &n, &cap) != 2)
        throw std::runtime_error("series: bad header (line 1)");
    PowerSeriesPair f;
    f.dimension = n;
    f.degree_cap = cap;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string kind, index;
        double re = 0, im = 0;
        if (!(ls >> kind >> index >> re >> im) || (kind != "A" && kind != "B"))
            throw std::runtime_error("series: bad record (line " +
                                     std::to_string(lineno) + ")");
        MultiIndex alpha = MultiIndex::parse(index);
        try {
            if (kind == "A")
                f.set_a(alpha, cplx(re, im));
            else
                f.set_b(alpha, cplx(re, im));
        } catch (const std::exception& e) {
            throw std::runtime_error("series: " + std::string(e.what()) +
                                     " (line " + std::to_string(lineno) + ")");
        }
    }
    return f;
}

} // namespace splab
