#include "spinsym/tpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace spinsym {

TPoly::TPoly(int c) {
    if (c != 0) coeffs_.emplace_back(c);
}

TPoly::TPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

TPoly::TPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

TPoly::TPoly(std::initializer_list<Rational> ascending) : TPoly(std::vector<Rational>(ascending)) {}

TPoly TPoly::monomial(const Rational& c, int power) {
    if (power < 0) throw std::invalid_argument("TPoly::monomial: negative power");
    if (c == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return TPoly(std::move(v));
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TPoly::coeff(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational TPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational TPoly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

bool TPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

TPoly TPoly::reversed(int deg) const {
    if (degree() > deg) throw std::invalid_argument("TPoly::reversed: degree exceeds bound");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, 0);
    for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(deg - i)] = coeffs_[i];
    return TPoly(std::move(v));
}

TPoly TPoly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("TPoly::shifted: negative shift");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    TPoly out;
    out.coeffs_ = std::move(v);
    return out;
}

TPoly TPoly::substitute_scaled(const Rational& c) const {
    TPoly out = *this;
    Rational power = 1;
    for (auto& x : out.coeffs_) {
        x *= power;
        power *= c;
    }
    out.trim();
    return out;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    TPoly out;
    out.coeffs_ = std::move(v);
    out.trim();
    return out;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TPoly operator-(TPoly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
}

std::string TPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (negative) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const bool unit = mag == 1;
        if (k == 0 || !unit) {
            if (mag.get_den() == 1) {
                out += mag.get_str();
            } else if (k == 0) {
                out += mag.get_str();
            } else {
                out += "(" + mag.get_str() + ")";
            }
        }
        if (k >= 1) out += 't';
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    TPoly run() {
        TPoly value = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "': " + why +
                                    " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    TPoly expr() {
        TPoly acc;
        bool first = true;
        while (true) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            TPoly term = product();
            acc += sign < 0 ? -term : term;
            first = false;
            c = peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

    bool starts_factor(char c) const {
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    TPoly product() {
        TPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (starts_factor(c)) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    TPoly factor() {
        TPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            const long e = integer();
            TPoly out = 1;
            for (long i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    TPoly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            TPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return TPoly::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            Rational value(std::string(s_.substr(start, pos_ - start)));
            value.canonicalize();
            return TPoly(value);
        }
        fail("expected factor");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

TPoly TPoly::parse(std::string_view text) { return PolyParser(text).run(); }

TLaurent::TLaurent(int low_exponent, std::vector<Rational> ascending)
    : low_(low_exponent), coeffs_(std::move(ascending)) {
    normalize();
}

TLaurent::TLaurent(const TPoly& f, int shift) : low_(shift), coeffs_(f.coefficients()) { normalize(); }

void TLaurent::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

Rational TLaurent::coeff(int power) const {
    const int idx = power - low_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(low_ + static_cast<int>(coeffs_.size()), o.low_ + static_cast<int>(o.coeffs_.size()));
    std::vector<Rational> v(static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(v);
    normalize();
    return *this;
}

TLaurent& TLaurent::operator*=(const TLaurent& o) {
    if (is_zero() || o.is_zero()) return *this = TLaurent();
    const TPoly product = TPoly(coeffs_) * TPoly(o.coeffs_);
    return *this = TLaurent(product, low_ + o.low_);
}

TPoly regular_part(const TLaurent& f) {
    std::vector<Rational> v;
    const auto& c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int power = f.low_exponent() + static_cast<int>(i);
        if (power < 0) continue;
        if (v.size() < static_cast<std::size_t>(power) + 1) v.resize(static_cast<std::size_t>(power) + 1, 0);
        v[static_cast<std::size_t>(power)] = c[i];
    }
    return TPoly(std::move(v));
}

TPoly exact_div(const TPoly& f, const TPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
    std::vector<Rational> rem = f.coefficients();
    const int dg = g.degree();
    const Rational lead = g.leading();
    if (f.degree() < dg) {
        if (!f.is_zero()) throw std::domain_error("exact_div: " + f.to_string() + " not divisible by " + g.to_string());
        return {};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    for (int k = f.degree() - dg; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + dg)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k + j)] -= q * g.coeff(j);
    }
    for (const auto& r : rem) {
        if (r != 0) {
            throw std::domain_error("exact_div: " + f.to_string() + " not divisible by " + g.to_string());
        }
    }
    return TPoly(std::move(quot));
}

TPoly t_integer(int n) {
    if (n < 0) throw std::invalid_argument("t_integer: negative argument");
    if (n == 0) return 1;
    return TPoly(std::vector<Rational>(static_cast<std::size_t>(n), 1));
}

TPoly signed_t(int k) {
    if (k < 0) return {};
    if (k == 0) return 1;
    std::vector<Rational> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = ((k - 1 - i) % 2 == 0) ? 1 : -1;
    return TPoly(std::move(v));
}

TPoly gauss_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("gauss_binomial: need 0 <= k <= n");
    auto factorial = [](int m) {
        TPoly acc = 1;
        for (int i = 1; i <= m; ++i) acc *= t_integer(i);
        return acc;
    };
    return exact_div(factorial(n), factorial(k) * factorial(n - k));
}

TPoly d_poly(const Partition& p) {
    TPoly acc = 1;
    for (int part : p) acc *= TPoly(1) + TPoly::monomial(1, part);
    return acc;
}

int d_count(const Partition& p, int i) {
    const Rational c = d_poly(p).coeff(i);
    return static_cast<int>(c.get_num().get_si());
}

Rational pow2(int e) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpz_class(1), m) : Rational(m);
}

TPoly inv_z_t(const Partition& rho) {
    if (!rho.is_odd()) throw std::invalid_argument("inv_z_t: partition must be odd");
    TPoly acc = 1;
    for (int part : rho) acc *= TPoly(1) - TPoly::monomial(1, part);
    Rational scale = pow2(static_cast<int>(rho.length()));
    if (rho.length() % 2 == 1) scale = -scale;
    scale /= Rational(z_factor(rho));
    return acc * scale;
}

}  // namespace spinsym
