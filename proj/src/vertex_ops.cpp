#include "spinsym/vertex_ops.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace spinsym {

OperatorSpec OperatorSpec::schur_q() {
    return {"Q", [](int n) { return TPoly(Rational(2, n)); }, [](int) { return TPoly(-1); }, false};
}

OperatorSpec OperatorSpec::hall_littlewood() {
    return {"G", [](int n) { return TPoly(Rational(2, n)); },
            [](int n) { return TPoly::monomial(1, n) - TPoly(1); }, false};
}

OperatorSpec OperatorSpec::hall_littlewood_dual() {
    return {"G*", [](int n) { return (TPoly::monomial(1, n) - TPoly(1)) * Rational(2, n); },
            [](int) { return TPoly(1); }, true};
}

OperatorSpec OperatorSpec::q_series() {
    return {"q", [](int n) { return TPoly(Rational(2, n)); }, [](int) { return TPoly(); }, false};
}

OperatorSpec OperatorSpec::q_dual() {
    return {"q*", [](int) { return TPoly(); }, [](int) { return TPoly(1); }, true};
}

GammaElement VertexEngine::creation_term(const OperatorSpec& spec, int k) const {
    {
        std::shared_lock lock(mutex_);
        auto it = creation_.find(spec.name);
        if (it != creation_.end() && static_cast<int>(it->second.size()) > k) return it->second[k];
    }
    // E = exp(S) satisfies k E_k = sum_n n S_n E_{k-n}.
    std::vector<GammaElement> series;
    {
        std::shared_lock lock(mutex_);
        auto it = creation_.find(spec.name);
        if (it != creation_.end()) series = it->second;
    }
    if (series.empty()) series.push_back(GammaElement::one());
    for (int j = static_cast<int>(series.size()); j <= k; ++j) {
        GammaElement acc;
        for (int n = 1; n <= j; n += 2) {
            const TPoly c = spec.creation(n);
            if (c.is_zero()) continue;
            acc += GammaElement::p_monomial(Partition{n}) * series[j - n] * (c * Rational(n));
        }
        series.push_back(acc * TPoly(Rational(1, j)));
    }
    std::unique_lock lock(mutex_);
    auto& slot = creation_[spec.name];
    if (slot.size() < series.size()) slot = series;
    return series[k];
}

GammaElement VertexEngine::apply(const OperatorSpec& spec, int m, const GammaElement& f) const {
    if (f.is_zero()) return {};
    const int exponent = spec.starred ? -m : m;
    const int top = f.max_degree();

    // Annihilation part first: v_j is the z^{-j} coefficient, zero past deg f.
    std::vector<GammaElement> v{f};
    for (int j = 1; j <= top; ++j) {
        GammaElement acc;
        for (int n = 1; n <= j; n += 2) {
            const TPoly a = spec.annihilation(n);
            if (a.is_zero() || v[j - n].is_zero()) continue;
            acc += d_dp(n, v[j - n]) * (a * Rational(n));
        }
        v.push_back(acc * TPoly(Rational(1, j)));
    }

    GammaElement out;
    for (int j = 0; j <= top; ++j) {
        const int k = exponent + j;
        if (k < 0 || v[j].is_zero()) continue;
        out += creation_term(spec, k) * v[j];
    }
    return out;
}

GammaElement VertexEngine::apply_sequence(const OperatorSpec& spec, const std::vector<int>& modes,
                                          const GammaElement& f) const {
    GammaElement acc = f;
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) acc = apply(spec, *it, acc);
    return acc;
}

GammaElement VertexEngine::q_row(int n) const {
    if (n < 0) return {};
    return creation_term(OperatorSpec::q_series(), n);
}

GammaElement VertexEngine::q_prod(const Partition& lambda) const {
    GammaElement acc = GammaElement::one();
    for (int part : lambda) acc = acc * q_row(part);
    return acc;
}

GammaElement VertexEngine::schur_q(const Partition& lambda) const {
    if (!lambda.is_strict()) {
        throw std::invalid_argument("schur_q: (" + lambda.to_string() + ") is not strict");
    }
    {
        std::shared_lock lock(mutex_);
        auto it = schur_q_.find(lambda);
        if (it != schur_q_.end()) return it->second;
    }
    GammaElement value = lambda.empty()
                             ? GammaElement::one()
                             : apply(OperatorSpec::schur_q(), lambda[0], schur_q(remove_part(lambda, 1)));
    std::unique_lock lock(mutex_);
    schur_q_.try_emplace(lambda, value);
    return value;
}

GammaElement VertexEngine::qhl(const Partition& lambda) const {
    if (!lambda.is_strict()) {
        throw std::invalid_argument("qhl: (" + lambda.to_string() + ") is not strict");
    }
    return qhl_modes(lambda.parts());
}

GammaElement VertexEngine::qhl_modes(const std::vector<int>& modes) const {
    {
        std::shared_lock lock(mutex_);
        auto it = qhl_.find(modes);
        if (it != qhl_.end()) return it->second;
    }
    GammaElement value;
    if (modes.empty()) {
        value = GammaElement::one();
    } else {
        const std::vector<int> tail(modes.begin() + 1, modes.end());
        value = apply(OperatorSpec::hall_littlewood(), modes.front(), qhl_modes(tail));
    }
    std::unique_lock lock(mutex_);
    qhl_.try_emplace(modes, value);
    return value;
}

GammaElement VertexEngine::gstar_on_schur(int k, const Partition& lambda) const {
    if (k < 1) throw std::invalid_argument("gstar_on_schur: k must be positive");
    if (!lambda.is_strict()) {
        throw std::invalid_argument("gstar_on_schur: (" + lambda.to_string() + ") is not strict");
    }
    GammaElement out;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        const int r = lambda[i - 1] - k;
        if (r < 0) continue;
        const Rational sign = i % 2 == 1 ? 2 : -2;
        out += q_row(r) * schur_q(remove_part(lambda, i)) * TPoly::monomial(sign, r);
    }
    return out;
}

QExpansion VertexEngine::q_expansion(const GammaElement& f) const {
    QExpansion out;
    std::vector<int> weights;
    for (const auto& [mu, c] : f.terms()) {
        const int w = weight(mu);
        if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
    }
    for (int w : weights) {
        for (const auto& lambda : enumerate_strict(w)) {
            TPoly c = pair(f, schur_q(lambda)) * pow2(-static_cast<int>(lambda.length()));
            if (!c.is_zero()) out.emplace(lambda, std::move(c));
        }
    }
    return out;
}

std::map<Partition, GammaElement> VertexEngine::schur_q_entries() const {
    std::shared_lock lock(mutex_);
    return schur_q_;
}

std::map<std::vector<int>, GammaElement> VertexEngine::qhl_entries() const {
    std::shared_lock lock(mutex_);
    return qhl_;
}

void VertexEngine::seed_schur_q(const Partition& lambda, GammaElement value) const {
    std::unique_lock lock(mutex_);
    schur_q_.insert_or_assign(lambda, std::move(value));
}

void VertexEngine::seed_qhl(const std::vector<int>& modes, GammaElement value) const {
    std::unique_lock lock(mutex_);
    qhl_.insert_or_assign(modes, std::move(value));
}

}  // namespace spinsym
