#include "splab/multiindex.hpp"

#include "splab/numerics.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace splab {

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty())
        throw std::invalid_argument("MultiIndex: length must be >= 1");
    order_ = 0;
    for (int v : e_) {
        if (v < 0)
            throw std::invalid_argument("MultiIndex: entries must be >= 0");
        order_ += v;
    }
}

int MultiIndex::support_size() const {
    int n = 0;
    for (int v : e_)
        if (v != 0)
            ++n;
    return n;
}

bool MultiIndex::dominated_by(const MultiIndex& m) const {
    if (dimension() != m.dimension())
        return false;
    for (int k = 0; k < dimension(); ++k)
        if (e_[static_cast<std::size_t>(k)] > m[k])
            return false;
    return true;
}

std::string MultiIndex::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (k)
            out << ',';
        out << e_[k];
    }
    out << ']';
    return out.str();
}

MultiIndex MultiIndex::parse(const std::string& text) {
    std::size_t first = text.find('[');
    std::size_t last = text.rfind(']');
    if (first == std::string::npos || last == std::string::npos ||
        last <= first)
        throw std::invalid_argument("MultiIndex::parse: expected [a,b,...]");
    std::vector<int> exps;
    std::string body = text.substr(first + 1, last - first - 1);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ','))
        exps.push_back(std::stoi(item));
    return MultiIndex(std::move(exps));
}

MultiIndex unit_index(int dimension, int k) {
    std::vector<int> e(static_cast<std::size_t>(dimension), 0);
    e.at(static_cast<std::size_t>(k)) = 1;
    return MultiIndex(std::move(e));
}

std::vector<MultiIndex> enumerate_degree(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("enumerate_degree: need n >= 1, k >= 0");
    const double log_count = log_binomial(n + k - 1, n - 1);
    if (log_count > std::log(2e7))
        throw std::length_error(
            "enumerate_degree: index count exceeds capacity");

    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // monomial lex order: (k,0,...) first, (0,...,k) last
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            fill(pos + 1, remaining - v);
        }
    };
    fill(0, k);
    return out;
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("log_binomial: need 0 <= k <= n");
    if (k == 0 || k == n)
        return 0.0;
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

double log_power_ratio(const MultiIndex& alpha) {
    const int total = alpha.order();
    if (total < 1)
        throw std::invalid_argument("power_ratio: requires |alpha| >= 1");
    double acc = total * std::log(static_cast<double>(total));
    for (int k = 0; k < alpha.dimension(); ++k)
        if (alpha[k] > 0)
            acc -= alpha[k] * std::log(static_cast<double>(alpha[k]));
    return acc;
}

double power_ratio(const MultiIndex& alpha) {
    return std::exp(log_power_ratio(alpha));
}

double sup_monomial_pball(const MultiIndex& alpha, double p) {
    if (alpha.order() < 1)
        throw std::invalid_argument(
            "sup_monomial_pball: requires |alpha| >= 1");
    if (!(p >= 1))
        throw std::invalid_argument("sup_monomial_pball: requires p >= 1");
    if (std::isinf(p))
        return 1.0;
    return std::exp(-log_power_ratio(alpha) / p);
}

Lemma42Check check_lemma_42(const MultiIndex& alpha, const MultiIndex& m,
                            int n) {
    if (alpha.dimension() != n || m.dimension() != n)
        throw std::invalid_argument("check_lemma_42: dimension mismatch");
    if (alpha.order() < 1)
        throw std::invalid_argument("check_lemma_42: requires |alpha| >= 1");
    if (!alpha.dominated_by(m))
        throw std::invalid_argument(
            "check_lemma_42: requires alpha <= m componentwise");

    const double lhs = log_power_ratio(alpha);
    const double rhs = m.order() * std::log(static_cast<double>(n));
    Lemma42Check result;
    result.slack = rhs - lhs;
    result.equality = std::abs(result.slack) <= 1e-12;
    result.holds = result.slack >= -1e-12;
    return result;
}

bool stirling_bound_check(int n, const MultiIndex& m) {
    if (m.order() < 1)
        throw std::invalid_argument(
            "stirling_bound_check: requires |m| >= 1");
    const double total = m.order();
    const double lhs = log_binomial(n + m.order() - 1, n - 1);
    const double rhs = total * (1.0 + std::log1p(n / total));
    return lhs <= rhs + 1e-12;
}

} // namespace splab
