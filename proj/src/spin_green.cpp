#include "spinsym/spin_green.hpp"

#include <mutex>
#include <stdexcept>

#include "spinsym/parallel.hpp"

namespace spinsym {

namespace {

void check_pair(const char* who, const Partition& lambda, const Partition& mu) {
    if (!lambda.is_strict()) {
        throw std::invalid_argument(std::string(who) + ": (" + lambda.to_string() + ") is not strict");
    }
    if (!mu.is_odd()) {
        throw std::invalid_argument(std::string(who) + ": (" + mu.to_string() + ") is not odd");
    }
    if (weight(lambda) != weight(mu)) {
        throw std::invalid_argument(std::string(who) + ": weight mismatch between (" + lambda.to_string() +
                                    ") and (" + mu.to_string() + ")");
    }
}

}  // namespace

TPoly SpinGreenEngine::y_direct(const Partition& lambda, const Partition& mu) const {
    check_pair("y_direct", lambda, mu);
    return pair(vertex_.qhl(lambda), GammaElement::p_monomial(mu));
}

TPoly SpinGreenEngine::y_recursive(const Partition& lambda, const Partition& mu) const {
    check_pair("y_recursive", lambda, mu);
    if (lambda.empty()) return 1;
    PartitionPair key{lambda, mu};
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const int n = weight(lambda);
    const int rest = n - lambda[0];
    const Partition tail = remove_part(lambda, 1);
    TPoly value;
    for (int i = 0; i <= rest; ++i) {
        const auto rhos = enumerate_odd(rest - i);
        for (const auto& nu : index_subpartitions(mu, i)) {
            for (const auto& rho : rhos) {
                value += inv_z_t(rho) * y_recursive(tail, union_sorted(nu, rho));
            }
        }
    }
    std::unique_lock lock(mutex_);
    memo_.try_emplace(std::move(key), value);
    return value;
}

TPoly SpinGreenEngine::y_via_l(const Partition& lambda, const Partition& mu) const {
    check_pair("y_via_l", lambda, mu);
    const GammaElement p_mu = GammaElement::p_monomial(mu);
    TPoly value;
    for (const auto& nu : enumerate_strict(weight(lambda))) {
        const TPoly l = kostka_.l_recursive(nu, lambda);
        if (l.is_zero()) continue;
        value += l * pair(vertex_.schur_q(nu), p_mu);
    }
    return value;
}

Rational SpinGreenEngine::spin_character(const Partition& lambda, const Partition& mu) const {
    check_pair("spin_character", lambda, mu);
    const int twice = static_cast<int>(lambda.length()) - static_cast<int>(mu.length()) + epsilon(lambda);
    if (twice % 2 != 0) {
        throw std::domain_error("spin_character: odd 2-exponent for (" + lambda.to_string() + "), (" +
                                mu.to_string() + ")");
    }
    const Rational value = y_recursive(lambda, mu).eval(0) * pow2(-twice / 2);
    if (value.get_den() != 1) {
        throw std::domain_error("spin_character: non-integer value " + value.get_str() + " at (" +
                                lambda.to_string() + "), (" + mu.to_string() + ")");
    }
    return value;
}

YTable SpinGreenEngine::y_table(int n, unsigned jobs) const {
    if (n < 0) throw std::invalid_argument("y_table: n must be non-negative");
    YTable table;
    table.kind = "Y";
    table.n = n;
    table.rows = enumerate_strict(n);
    table.cols = enumerate_odd(n);
    const std::size_t nr = table.rows.size(), nc = table.cols.size();
    table.entries.assign(nr, std::vector<TPoly>(nc));
    parallel_for(nr * nc, jobs, [&](std::size_t cell) {
        const std::size_t r = cell / nc, c = cell % nc;
        table.entries[r][c] = y_recursive(table.rows[r], table.cols[c]);
    });
    return table;
}

SpinCharTable SpinGreenEngine::spin_char_table(int n, unsigned jobs) const {
    const YTable y = y_table(n, jobs);
    SpinCharTable table;
    table.kind = "zeta";
    table.n = n;
    table.rows = y.rows;
    table.cols = y.cols;
    table.entries.assign(y.rows.size(), std::vector<Rational>(y.cols.size()));
    for (std::size_t r = 0; r < y.rows.size(); ++r) {
        for (std::size_t c = 0; c < y.cols.size(); ++c) {
            table.entries[r][c] = spin_character(y.rows[r], y.cols[c]);
        }
    }
    return table;
}

std::map<PartitionPair, TPoly> SpinGreenEngine::memo_entries() const {
    std::shared_lock lock(mutex_);
    return memo_;
}

void SpinGreenEngine::seed(const Partition& lambda, const Partition& mu, TPoly value) const {
    std::unique_lock lock(mutex_);
    memo_.insert_or_assign(PartitionPair{lambda, mu}, std::move(value));
}

TPoly y_two_row(int k, int n, const Partition& mu) {
    if (!(k > n - k && n - k > 0)) {
        throw std::invalid_argument("y_two_row: (" + std::to_string(k) + "," + std::to_string(n - k) +
                                    ") is not a strict two-part partition");
    }
    if (!mu.is_odd() || weight(mu) != n) {
        throw std::invalid_argument("y_two_row: mu must be an odd partition of " + std::to_string(n));
    }
    const TPoly regular = regular_part(TLaurent(d_poly(mu), -k));
    const TPoly bracket = regular - TPoly(regular.eval(-1));
    const TPoly t_minus_one{-1, 1};
    const TPoly t_plus_one{1, 1};
    return exact_div(bracket, t_plus_one) * t_minus_one * Rational(2) + TPoly(d_count(mu, n - k));
}

}  // namespace spinsym
