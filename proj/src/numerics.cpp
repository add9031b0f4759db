#include "splab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace splab {

void gauss_legendre_rule(int n, std::vector<double>& nodes,
                         std::vector<double>& weights) {
    if (n < 2)
        throw std::invalid_argument("gauss_legendre_rule: need n >= 2");

    static std::mutex cache_mutex;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>>
        cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) {
            nodes = it->second.first;
            weights = it->second.second;
            return;
        }
    }

    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on the i-th root of P_n, starting from the
        // Chebyshev-like guess.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0, dz;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            dz = -p1 / pp;
            z += dz;
        } while (std::abs(dz) > 10 * std::numeric_limits<double>::epsilon());
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, std::make_pair(nodes, weights));
}

static double integrate_panel(const std::function<double(double)>& f,
                              double a, double b,
                              const std::vector<double>& nodes,
                              const std::vector<double>& weights) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = mid + half * nodes[i];
        const double fx = f(x);
        if (!std::isfinite(fx)) {
            std::ostringstream msg;
            msg << "gauss_legendre: non-finite integrand value at x = " << x;
            throw std::runtime_error(msg.str());
        }
        sum += weights[i] * fx;
    }
    return half * sum;
}

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, const QuadratureSpec& spec) {
    if (!(a < b))
        throw std::invalid_argument("gauss_legendre: requires a < b");
    if (spec.node_count < 2)
        throw std::invalid_argument("gauss_legendre: node_count >= 2");
    if (!(spec.tolerance > 0))
        throw std::invalid_argument("gauss_legendre: tolerance > 0");

    std::vector<double> cuts = spec.split_points;
    std::sort(cuts.begin(), cuts.end());
    for (double c : cuts)
        if (!(c > a && c < b))
            throw std::invalid_argument(
                "gauss_legendre: split point outside (a,b)");

    std::vector<double> nodes, weights;
    gauss_legendre_rule(spec.node_count, nodes, weights);

    double total = 0.0, left = a;
    for (double c : cuts) {
        total += integrate_panel(f, left, c, nodes, weights);
        left = c;
    }
    total += integrate_panel(f, left, b, nodes, weights);
    return total;
}

double abs_cos_integral(int m, double gamma, const QuadratureSpec& spec) {
    if (m < 1)
        throw std::invalid_argument("abs_cos_integral: requires m >= 1");

    // cos(m*theta + gamma) vanishes at theta = (pi/2 + k*pi - gamma)/m.
    QuadratureSpec local = spec;
    local.split_points.clear();
    const double period_end = 2 * M_PI;
    const double first = (M_PI / 2 - gamma) / m;
    const double step = M_PI / m;
    double z = first - step * std::ceil((first - 0.0) / step);
    for (; z < period_end; z += step)
        if (z > 1e-15 && z < period_end - 1e-15)
            local.split_points.push_back(z);

    auto f = [m, gamma](double t) { return std::abs(std::cos(m * t + gamma)); };
    return gauss_legendre(f, 0.0, period_end, local);
}

double log_gamma(double x) {
    if (!(x > 0))
        throw std::invalid_argument("log_gamma: requires x > 0");

    // Lanczos, g = 7, 9 coefficients.
    static const double coef[9] = {
        0.99999999999980993,      676.5203681218851,
        -1259.1392167224028,      771.32342877765313,
        -176.61502916214059,      12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6,
        1.5056327351493116e-7};

    if (x < 0.5) {
        // reflection keeps full accuracy on (0, 1/2)
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double sum = coef[0];
    for (int k = 1; k < 9; ++k)
        sum += coef[k] / (z + k);
    const double t = z + 7.5;
    return 0.5 * std::log(2 * M_PI) + (z + 0.5) * std::log(t) - t +
           std::log(sum);
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
    if (!(lo < hi))
        throw std::invalid_argument("bisect: requires lo < hi");
    if (!(tol > 0))
        throw std::invalid_argument("bisect: requires tol > 0");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if (!(flo * fhi < 0))
        throw std::runtime_error("bisect: no sign change on [lo,hi]");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if (flo * fmid < 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace splab
