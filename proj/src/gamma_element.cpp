#include "spinsym/gamma_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinsym {

GammaElement GammaElement::one() { return p_monomial(Partition{}); }

GammaElement GammaElement::p_monomial(const Partition& mu) {
    if (!mu.is_odd()) {
        throw std::invalid_argument("p_monomial: partition (" + mu.to_string() + ") has an even part");
    }
    GammaElement e;
    e.terms_.emplace(mu, TPoly(1));
    return e;
}

TPoly GammaElement::coefficient(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? TPoly() : it->second;
}

void GammaElement::add_term(const Partition& mu, const TPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int GammaElement::max_degree() const {
    int d = -1;
    for (const auto& [mu, c] : terms_) d = std::max(d, weight(mu));
    return d;
}

bool GammaElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = weight(terms_.begin()->first);
    for (const auto& [mu, c] : terms_) {
        if (weight(mu) != d) return false;
    }
    return true;
}

int GammaElement::degree() const {
    if (!is_homogeneous()) throw std::logic_error("GammaElement::degree: element is not homogeneous");
    return terms_.empty() ? 0 : weight(terms_.begin()->first);
}

GammaElement GammaElement::homogeneous_part(int d) const {
    GammaElement out;
    for (const auto& [mu, c] : terms_) {
        if (weight(mu) == d) out.terms_.emplace(mu, c);
    }
    return out;
}

GammaElement& GammaElement::operator+=(const GammaElement& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, c);
    return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& o) {
    for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
    return *this;
}

GammaElement& GammaElement::operator*=(const TPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

GammaElement operator*(const GammaElement& a, const GammaElement& b) {
    GammaElement out;
    for (const auto& [mu, c] : a.terms_) {
        for (const auto& [nu, d] : b.terms_) out.add_term(union_sorted(mu, nu), c * d);
    }
    return out;
}

std::string GammaElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*p[" + mu.to_string() + "]";
    }
    return out;
}

GammaElement d_dp(int n, const GammaElement& f) {
    if (n <= 0 || n % 2 == 0) throw std::invalid_argument("d_dp: index must be odd and positive");
    GammaElement out;
    for (const auto& [mu, c] : f.terms()) {
        const int m = mu.multiplicity(n);
        if (m == 0) continue;
        std::vector<int> parts = mu.parts();
        parts.erase(std::find(parts.begin(), parts.end(), n));
        out.add_term(Partition(std::move(parts)), c * Rational(m));
    }
    return out;
}

GammaElement p_adjoint(int n, const GammaElement& f) { return d_dp(n, f) * TPoly(Rational(n, 2)); }

TPoly pair(const GammaElement& f, const GammaElement& g) {
    TPoly acc;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& [mu, c] : small.terms()) {
        const TPoly d = large.coefficient(mu);
        if (d.is_zero()) continue;
        const Rational w = Rational(z_factor(mu)) * pow2(-static_cast<int>(mu.length()));
        acc += (c * d) * w;
    }
    return acc;
}

}  // namespace spinsym
