#pragma once

#include <map>
#include <shared_mutex>
#include <utility>

#include "spinsym/table.hpp"
#include "spinsym/vertex_ops.hpp"

namespace spinsym {

using PartitionPair = std::pair<Partition, Partition>;

// Q-Kostka polynomials L_{lambda mu}(t), the coefficient of Q_lambda in G_mu.
class QKostkaEngine {
public:
    explicit QKostkaEngine(const VertexEngine& vertex) : vertex_(vertex) {}

    // 2^{-l(lambda)} <G_mu.1, Q_lambda.1>, straight from the vertex operators.
    TPoly l_direct(const Partition& lambda, const Partition& mu) const;

    // Peels mu_1 off the column index:
    //   L_{lambda mu} = sum_{i : lambda_i >= mu_1} sum_xi (-1)^{i-1} 2^{a(xi / lambda^i)}
    //                   t^{lambda_i - mu_1} L_{xi, mu^1}
    // where xi / lambda^i runs over horizontal strips of size lambda_i - mu_1.
    TPoly l_recursive(const Partition& lambda, const Partition& mu) const;

    // The mu-column of the L-table.
    QExpansion expand_g_in_q(const Partition& mu) const;

    LTable l_table(int n, unsigned jobs = 1) const;

    std::map<PartitionPair, TPoly> memo_entries() const;
    void seed(const Partition& lambda, const Partition& mu, TPoly value) const;

    const VertexEngine& vertex() const { return vertex_; }

private:
    const VertexEngine& vertex_;
    mutable std::shared_mutex mutex_;
    mutable std::map<PartitionPair, TPoly> memo_;
};

// Closed form for a two-part column index mu = (mu_1, mu_2):
// 2^{1 - delta_{lambda mu}} t^{lambda_1 - mu_1} when mu <= lambda, else 0.
TPoly l_two_row(const Partition& lambda, const Partition& mu);

}  // namespace spinsym
