#pragma once

#include "uniform_kl/unipoly.hpp"

#include <vector>

namespace uniform_kl {

inline constexpr int kDefaultSeriesOrder = 12;

/// Power series in u truncated to the slots u^0 .. u^{order-1}, with
/// coefficients exact polynomials in t.
class USeries {
public:
    explicit USeries(int order);
    USeries(int order, std::vector<UniPoly> coeffs);  // extra terms are dropped

    static USeries constant(int order, const UniPoly& c);
    /// c * u^k (zero if k >= order).
    static USeries monomial(int order, const UniPoly& c, int k);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const UniPoly& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    UniPoly& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
    const std::vector<UniPoly>& coeffs() const { return coeffs_; }
    /// [t^i u^k]
    Rational coeff(int k, long i) const { return (*this)[k].coeff(i); }
    bool is_zero() const;

    USeries& operator+=(const USeries& o);
    USeries& operator-=(const USeries& o);
    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
    friend USeries operator*(const USeries& a, const USeries& b);
    friend USeries operator*(USeries a, const Rational& c);
    USeries operator-() const;
    friend bool operator==(const USeries&, const USeries&) = default;

    /// Truncated or zero-padded copy at a new order.
    USeries with_order(int order) const;

private:
    std::vector<UniPoly> coeffs_;
};

USeries series_add(const USeries& a, const USeries& b);
USeries series_mul(const USeries& a, const USeries& b);
USeries series_neg(const USeries& a);

/// Multiplicative inverse; the u^0 coefficient must be a nonzero constant.
USeries series_inverse(const USeries& s);
/// Square root with constant term 1 by Newton iteration; requires s's u^0 coefficient to be 1.
USeries series_sqrt(const USeries& s);
/// s(t, inner(t, u)); inner must have zero u^0 coefficient.
USeries series_substitute_u(const USeries& s, const USeries& inner);
/// t^i u^k -> t^i u^{i+k}, i.e. f(t, u) -> f(tu, u), truncated.
USeries series_rescale_t_by_u(const USeries& s);
/// s / u; aborts unless the u^0 coefficient is zero. The result has order - 1 slots.
USeries series_shift_down(const USeries& s);

/// Phi(t, u) = sum_{n >= 2} P_n(t) u^{n-1}.
USeries phi_from_table(int order);
/// Generating function f(t, u) = sum d_{m,i} t^i u^{m-1}, from the square-root closed form
/// 2((2t+1)u + sqrt(1 - 2(2t+1)u + u^2) - 1) / (1 - (2t+1)^2).
USeries beckwith_f(int order);
/// g(t, u) = f(tu, u) / u.
USeries g_series(int order);

/// Phi(1/t, tu) - [(tu - u)/((1 - tu + u)(1 + u)) + Phi(t, u/(1 - tu + u)) / (1 - tu + u)^2]
/// for an arbitrary candidate series `phi`; zero iff the functional equation holds to order.
USeries functional_equation_residual(const USeries& phi);
/// The residual for Phi built from the closed-form coefficients.
USeries check_functional_equation(int order);

}  // namespace uniform_kl
