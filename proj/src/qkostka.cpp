#include "spinsym/qkostka.hpp"

#include <mutex>
#include <stdexcept>

#include "spinsym/parallel.hpp"

namespace spinsym {

namespace {

void check_pair(const char* who, const Partition& lambda, const Partition& mu) {
    if (!lambda.is_strict() || !mu.is_strict()) {
        throw std::invalid_argument(std::string(who) + ": both indices must be strict partitions");
    }
    if (weight(lambda) != weight(mu)) {
        throw std::invalid_argument(std::string(who) + ": weight mismatch between (" + lambda.to_string() +
                                    ") and (" + mu.to_string() + ")");
    }
}

}  // namespace

TPoly QKostkaEngine::l_direct(const Partition& lambda, const Partition& mu) const {
    check_pair("l_direct", lambda, mu);
    return pair(vertex_.qhl(mu), vertex_.schur_q(lambda)) * pow2(-static_cast<int>(lambda.length()));
}

TPoly QKostkaEngine::l_recursive(const Partition& lambda, const Partition& mu) const {
    check_pair("l_recursive", lambda, mu);
    if (mu.empty()) return 1;
    PartitionPair key{lambda, mu};
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const int head = mu[0];
    const Partition mu_tail = remove_part(mu, 1);
    TPoly value;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const int r = lambda[i - 1] - head;
        if (r < 0) continue;
        const Partition removed = remove_part(lambda, i);
        TPoly inner;
        for (const auto& strip : horizontal_strips(removed, r)) {
            const TPoly sub = l_recursive(strip.outer, mu_tail);
            if (!sub.is_zero()) inner += sub * pow2(strip.a_stat);
        }
        if (inner.is_zero()) continue;
        inner = inner.shifted(r);
        if (i % 2 == 0) inner = -inner;
        value += inner;
    }
    std::unique_lock lock(mutex_);
    memo_.try_emplace(std::move(key), value);
    return value;
}

QExpansion QKostkaEngine::expand_g_in_q(const Partition& mu) const {
    if (!mu.is_strict()) throw std::invalid_argument("expand_g_in_q: (" + mu.to_string() + ") is not strict");
    QExpansion out;
    for (const auto& lambda : enumerate_strict(weight(mu))) {
        TPoly c = l_recursive(lambda, mu);
        if (!c.is_zero()) out.emplace(lambda, std::move(c));
    }
    return out;
}

LTable QKostkaEngine::l_table(int n, unsigned jobs) const {
    if (n < 0) throw std::invalid_argument("l_table: n must be non-negative");
    LTable table;
    table.kind = "L";
    table.n = n;
    table.rows = enumerate_strict(n);
    table.cols = table.rows;
    const std::size_t size = table.rows.size();
    table.entries.assign(size, std::vector<TPoly>(size));
    parallel_for(size * size, jobs, [&](std::size_t cell) {
        const std::size_t r = cell / size, c = cell % size;
        table.entries[r][c] = l_recursive(table.rows[r], table.cols[c]);
    });
    return table;
}

std::map<PartitionPair, TPoly> QKostkaEngine::memo_entries() const {
    std::shared_lock lock(mutex_);
    return memo_;
}

void QKostkaEngine::seed(const Partition& lambda, const Partition& mu, TPoly value) const {
    std::unique_lock lock(mutex_);
    memo_.insert_or_assign(PartitionPair{lambda, mu}, std::move(value));
}

TPoly l_two_row(const Partition& lambda, const Partition& mu) {
    if (mu.length() != 2) throw std::invalid_argument("l_two_row: mu must have exactly two parts");
    check_pair("l_two_row", lambda, mu);
    if (!dominance_leq(mu, lambda)) return {};
    const Rational coeff = lambda == mu ? 1 : 2;
    return TPoly::monomial(coeff, lambda[0] - mu[0]);
}

}  // namespace spinsym
