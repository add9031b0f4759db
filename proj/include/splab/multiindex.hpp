#ifndef SPLAB_MULTIINDEX_HPP
#define SPLAB_MULTIINDEX_HPP

#include <string>
#include <vector>

namespace splab {

/// Exponent tuple alpha = (alpha_1,...,alpha_n), all entries >= 0.
/// Immutable after construction; lexicographic order is the canonical
/// order used for enumeration and serialization.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<int> exponents);

    int dimension() const { return static_cast<int>(e_.size()); }
    int order() const { return order_; } // |alpha|
    int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& exponents() const { return e_; }

    /// Count of nonzero entries.
    int support_size() const;

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

    /// Graded monomial order: by |alpha| first, then the order produced by
    /// enumerate_degree ((2,0) before (1,1) before (0,2)).
    bool operator<(const MultiIndex& o) const {
        if (order_ != o.order_)
            return order_ < o.order_;
        return e_ > o.e_;
    }

    /// true iff this <= m componentwise (same dimension required).
    bool dominated_by(const MultiIndex& m) const;

    /// "[2,0,1]"
    std::string to_string() const;
    static MultiIndex parse(const std::string& text);

  private:
    std::vector<int> e_;
    int order_;
};

/// Unit multi-index e_k of the given dimension (k is 0-based).
MultiIndex unit_index(int dimension, int k);

/// All multi-indices of length n with |alpha| = k, in lexicographic order.
/// Throws std::length_error when the count C(n+k-1, n-1) would be huge.
std::vector<MultiIndex> enumerate_degree(int n, int k);

/// log of the binomial coefficient C(n, k).
double log_binomial(int n, int k);

/// log of |alpha|^|alpha| / alpha^alpha  (convention 0^0 = 1); |alpha| >= 1.
double log_power_ratio(const MultiIndex& alpha);

/// |alpha|^|alpha| / alpha^alpha.
double power_ratio(const MultiIndex& alpha);

/// sup of |xi^alpha| over the unit ball of l_p^n: (alpha^alpha/|alpha|^|alpha|)^{1/p}.
/// p may be infinity, in which case the sup is 1.
double sup_monomial_pball(const MultiIndex& alpha, double p);

struct Lemma42Check {
    bool holds;      // power_ratio(alpha) <= n^|m|
    bool equality;   // within 1e-12 in log space
    double slack;    // |m| log n - log power_ratio(alpha)
};

/// Combinatorial bound |alpha|^|alpha|/alpha^alpha <= n^|m| for
/// alpha <= m componentwise, with equality iff alpha = m and all m_k equal.
Lemma42Check check_lemma_42(const MultiIndex& alpha, const MultiIndex& m,
                            int n);

/// Stirling-type bound C(n+|m|-1, n-1) <= e^|m| (1 + n/|m|)^|m|.
bool stirling_bound_check(int n, const MultiIndex& m);

} // namespace splab

#endif
