#pragma once

#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "spinsym/gamma_element.hpp"

namespace spinsym {

// A vertex operator exp(sum_n c_n p_n z^n) exp(sum_n a_n d/dp_n z^{-n}),
// n running over odd positive integers. Unstarred series are written
// sum_m X_m z^m; starred series sum_m X_m z^{-m}.
struct OperatorSpec {
    std::string name;
    std::function<TPoly(int)> creation;
    std::function<TPoly(int)> annihilation;
    bool starred = false;

    // Q(z): c_n = 2/n, a_n = -1.
    static OperatorSpec schur_q();
    // G(z): c_n = 2/n, a_n = t^n - 1.
    static OperatorSpec hall_littlewood();
    // G*(z): c_n = 2(t^n - 1)/n, a_n = 1, starred.
    static OperatorSpec hall_littlewood_dual();
    // q(z): creation part of Q(z) alone.
    static OperatorSpec q_series();
    // q*(z): a_n = 1, no creation part, starred.
    static OperatorSpec q_dual();
};

// Strict-partition expansion of an element of Gamma in the Schur Q-basis.
using QExpansion = std::map<Partition, TPoly>;

// Executes vertex-operator modes on GammaElements. Holds memo tables for the
// creation series, Q_lambda.1 and G_lambda.1; all methods are safe to call
// concurrently.
class VertexEngine {
public:
    // Mode m of the operator applied to f.
    GammaElement apply(const OperatorSpec& spec, int m, const GammaElement& f) const;

    // Applies modes right to left: modes = (m_1, ..., m_k) gives X_{m_1}...X_{m_k} f.
    GammaElement apply_sequence(const OperatorSpec& spec, const std::vector<int>& modes,
                                const GammaElement& f) const;

    // q_n; zero for n < 0.
    GammaElement q_row(int n) const;
    GammaElement q_prod(const Partition& lambda) const;

    // Q_lambda.1 for strict lambda.
    GammaElement schur_q(const Partition& lambda) const;
    // G_lambda.1 for strict lambda.
    GammaElement qhl(const Partition& lambda) const;
    // G_{m_1}...G_{m_k}.1 for any integer sequence.
    GammaElement qhl_modes(const std::vector<int>& modes) const;

    // G*_k Q_lambda.1 by the closed sum over removed parts:
    // sum_i (-1)^{i-1} 2 t^{lambda_i - k} q_{lambda_i - k} Q_{lambda without i}.1
    GammaElement gstar_on_schur(int k, const Partition& lambda) const;

    // lambda -> 2^{-l(lambda)} <f, Q_lambda.1>, over every weight present in f.
    QExpansion q_expansion(const GammaElement& f) const;

    // Cache import/export. Entries are keyed by partition / mode sequence.
    std::map<Partition, GammaElement> schur_q_entries() const;
    std::map<std::vector<int>, GammaElement> qhl_entries() const;
    void seed_schur_q(const Partition& lambda, GammaElement value) const;
    void seed_qhl(const std::vector<int>& modes, GammaElement value) const;

private:
    // Coefficient of z^k in the creation exponential.
    GammaElement creation_term(const OperatorSpec& spec, int k) const;

    mutable std::shared_mutex mutex_;
    mutable std::map<std::string, std::vector<GammaElement>> creation_;
    mutable std::map<Partition, GammaElement> schur_q_;
    mutable std::map<std::vector<int>, GammaElement> qhl_;
};

}  // namespace spinsym
