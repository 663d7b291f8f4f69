#pragma once

#include "uniform_kl/arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace uniform_kl {

/// Dense polynomial in t with exact rational coefficients.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
    UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(const Rational& c, long exponent);
    static UniPoly t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^i (zero beyond the degree or for negative i).
    Rational coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Largest k with t^k dividing this polynomial; -1 for zero.
    long t_valuation() const;
    bool has_integer_coeffs() const;

    /// t^d * p(1/t). Requires d >= degree().
    UniPoly reversed(long d) const;
    /// p / t^k; aborts unless t^k divides p.
    UniPoly divide_by_t_power(long k) const;
    UniPoly shifted(long k) const;  // p * t^k
    /// Quotient and remainder of long division; throws std::domain_error for a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// p / divisor; aborts unless the remainder is zero.
    UniPoly divide_exact(const UniPoly& divisor) const;
    Rational evaluate(const Rational& x) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly pow(unsigned e) const;

    /// Human-readable rendering such as "1 + 9t + 5t^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace uniform_kl
