#pragma once

#include <map>

#include "spinsym/partition.hpp"
#include "spinsym/tpoly.hpp"

namespace spinsym {

// Element of Gamma (tensor Q[t]) in power-sum coordinates: a finite sum of
// p_mu over odd partitions mu with nonzero polynomial coefficients. Keys
// iterate in canonical decreasing-lexicographic order.
class GammaElement {
public:
    using Terms = std::map<Partition, TPoly>;

    GammaElement() = default;

    static GammaElement one();
    // Throws std::invalid_argument unless mu is odd.
    static GammaElement p_monomial(const Partition& mu);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    TPoly coefficient(const Partition& mu) const;

    // Adds c * p_mu.
    void add_term(const Partition& mu, const TPoly& c);

    // Highest weight among the keys, -1 for zero.
    int max_degree() const;
    // The weight shared by all keys; throws if the element is not homogeneous.
    int degree() const;
    bool is_homogeneous() const;
    // Projection to the weight-d component.
    GammaElement homogeneous_part(int d) const;

    GammaElement& operator+=(const GammaElement& o);
    GammaElement& operator-=(const GammaElement& o);
    GammaElement& operator*=(const TPoly& c);

    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
    friend GammaElement operator*(GammaElement a, const TPoly& c) { return a *= c; }
    friend GammaElement operator*(const TPoly& c, GammaElement a) { return a *= c; }
    friend GammaElement operator*(const GammaElement& a, const GammaElement& b);
    friend bool operator==(const GammaElement& a, const GammaElement& b) = default;

    std::string to_string() const;

private:
    Terms terms_;
};

// Plain partial derivative d/dp_n, n odd and positive.
GammaElement d_dp(int n, const GammaElement& f);
// p_n^* = (n/2) d/dp_n, the adjoint of multiplication by p_n.
GammaElement p_adjoint(int n, const GammaElement& f);

// <p_lambda, p_mu> = 2^{-l(lambda)} z_lambda delta, extended bilinearly.
TPoly pair(const GammaElement& f, const GammaElement& g);

}  // namespace spinsym
