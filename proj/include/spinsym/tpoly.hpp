#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "spinsym/partition.hpp"

namespace spinsym {

using Rational = mpq_class;

// Univariate polynomial in t with exact rational coefficients, stored densely
// by ascending power. Canonical: no trailing zeros; zero is the empty vector.
class TPoly {
public:
    TPoly() = default;
    TPoly(int c);
    TPoly(const Rational& c);
    explicit TPoly(std::vector<Rational> ascending);
    TPoly(std::initializer_list<Rational> ascending);

    static TPoly monomial(const Rational& c, int power);
    static TPoly t() { return monomial(1, 1); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int power) const;
    Rational leading() const;
    Rational eval(const Rational& at) const;
    bool is_integral() const;
    // Coefficient vector reversed against t^deg: t^deg * f(1/t).
    TPoly reversed(int deg) const;
    // f * t^k for k >= 0.
    TPoly shifted(int k) const;
    // Multiplies t by c inside f: f(c t).
    TPoly substitute_scaled(const Rational& c) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    TPoly& operator*=(const Rational& c);

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
    friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
    friend TPoly operator-(TPoly a);
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Descending powers, unit coefficients elided: "2t^2+8t+5", "-t+1", "0".
    std::string to_string() const;
    // Accepts expanded or factored forms such as "2(t-1)^2(2t^2+2t+1)".
    static TPoly parse(std::string_view text);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Laurent polynomial: low_exponent plus ascending coefficients.
class TLaurent {
public:
    TLaurent() = default;
    TLaurent(int low_exponent, std::vector<Rational> ascending);
    // f * t^shift
    TLaurent(const TPoly& f, int shift);

    int low_exponent() const { return low_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int power) const;

    TLaurent& operator+=(const TLaurent& o);
    TLaurent& operator*=(const TLaurent& o);
    friend TLaurent operator+(TLaurent a, const TLaurent& b) { return a += b; }
    friend TLaurent operator*(TLaurent a, const TLaurent& b) { return a *= b; }
    friend bool operator==(const TLaurent& a, const TLaurent& b) = default;

private:
    void normalize();
    int low_ = 0;
    std::vector<Rational> coeffs_;
};

// Drops strictly negative powers.
TPoly regular_part(const TLaurent& f);

// Quotient of f by g; throws std::domain_error on a nonzero remainder.
TPoly exact_div(const TPoly& f, const TPoly& g);

// [n]_t = 1 + t + ... + t^{n-1}, with [0]_t = 1.
TPoly t_integer(int n);
// (k)_t = (t^k - (-1)^k)/(t+1); (0)_t = 1 and (k)_t = 0 for k < 0.
TPoly signed_t(int k);
TPoly gauss_binomial(int n, int k);

// prod over parts i of (1 + t^i).
TPoly d_poly(const Partition& p);
// Number of index subsets of p summing to i.
int d_count(const Partition& p, int i);
// (-2)^{l(rho)} prod_j (1 - t^{rho_j}) / z_rho, i.e. (-2)^{l}/z_rho(t) with
// z_rho(t) = z_rho prod_j (1 - t^{rho_j})^{-1}.
TPoly inv_z_t(const Partition& rho);

Rational pow2(int e);

}  // namespace spinsym
