#pragma once

#include <map>
#include <shared_mutex>

#include "spinsym/qkostka.hpp"

namespace spinsym {

// Spin Green polynomials Y^lambda_mu(t) = <G_lambda.1, p_mu>, lambda strict
// and mu odd of the same weight, and the spin characters derived from them.
class SpinGreenEngine {
public:
    explicit SpinGreenEngine(const QKostkaEngine& kostka) : kostka_(kostka), vertex_(kostka.vertex()) {}

    TPoly y_direct(const Partition& lambda, const Partition& mu) const;

    // Removes lambda_1:
    //   Y^lambda_mu = sum_{i=0}^{n-lambda_1} sum_{nu in {mu}_i} sum_{rho in OP_{n-lambda_1-i}}
    //                 inv_z_t(rho) Y^{lambda^1}_{nu cup rho}
    // with nu counted once per index subset.
    TPoly y_recursive(const Partition& lambda, const Partition& mu) const;

    // sum over strict nu of L_{nu lambda}(t) Y^nu_mu(0), with the t = 0 values
    // read off <Q_nu.1, p_mu>.
    TPoly y_via_l(const Partition& lambda, const Partition& mu) const;

    // zeta^lambda_mu = Y^lambda_mu(0) 2^{-(l(lambda) - l(mu) + eps(lambda))/2}.
    // Throws std::domain_error if the exponent is odd or the value is not an
    // integer.
    Rational spin_character(const Partition& lambda, const Partition& mu) const;

    YTable y_table(int n, unsigned jobs = 1) const;
    SpinCharTable spin_char_table(int n, unsigned jobs = 1) const;

    std::map<PartitionPair, TPoly> memo_entries() const;
    void seed(const Partition& lambda, const Partition& mu, TPoly value) const;

private:
    const QKostkaEngine& kostka_;
    const VertexEngine& vertex_;
    mutable std::shared_mutex mutex_;
    mutable std::map<PartitionPair, TPoly> memo_;
};

// Closed form for lambda = (k, n - k), k > n - k > 0:
//   2(t-1)/(t+1) ([D_t(mu) t^{-k}]_+ - [D_t(mu) t^{-k}]_+ |_{t=-1}) + D^{(n-k)}(mu)
TPoly y_two_row(int k, int n, const Partition& mu);

}  // namespace spinsym
