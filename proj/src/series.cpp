#include "uniform_kl/series.hpp"

#include "uniform_kl/kl_numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace uniform_kl {

namespace {

void require_same_order(const USeries& a, const USeries& b) {
    if (a.order() != b.order()) throw std::domain_error("USeries: mismatched truncation orders");
}

int ceil_log2(int n) {
    int r = 0;
    while ((1 << r) < n) ++r;
    return r;
}

// 1 - tu + u
USeries moebius_denominator(int order) {
    return USeries(order, {UniPoly(1), UniPoly(1) - UniPoly::t()});
}

}  // namespace

USeries::USeries(int order) {
    if (order < 1) throw std::domain_error("USeries: order must be positive");
    coeffs_.resize(static_cast<size_t>(order));
}

USeries::USeries(int order, std::vector<UniPoly> coeffs) : USeries(order) {
    for (size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

USeries USeries::constant(int order, const UniPoly& c) { return USeries(order, {c}); }

USeries USeries::monomial(int order, const UniPoly& c, int k) {
    USeries s(order);
    if (k >= 0 && k < order) s[k] = c;
    return s;
}

bool USeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const UniPoly& p) { return p.is_zero(); });
}

USeries& USeries::operator+=(const USeries& o) {
    require_same_order(*this, o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

USeries& USeries::operator-=(const USeries& o) {
    require_same_order(*this, o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

USeries operator*(const USeries& a, const USeries& b) {
    require_same_order(a, b);
    const int n = a.order();
    USeries r(n);
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < n; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

USeries operator*(USeries a, const Rational& c) {
    for (auto& p : a.coeffs_) p *= c;
    return a;
}

USeries USeries::operator-() const {
    USeries r = *this;
    for (auto& p : r.coeffs_) p = -p;
    return r;
}

USeries USeries::with_order(int order) const {
    std::vector<UniPoly> c(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()));
    return USeries(order, std::move(c));
}

USeries series_add(const USeries& a, const USeries& b) { return a + b; }
USeries series_mul(const USeries& a, const USeries& b) { return a * b; }
USeries series_neg(const USeries& a) { return -a; }

USeries series_inverse(const USeries& s) {
    const UniPoly& c0 = s[0];
    if (c0.degree() != 0) throw std::domain_error("series_inverse: constant term is not a nonzero constant");
    const Rational inv0 = 1 / c0.coeff(0);
    const int n = s.order();
    USeries r(n);
    r[0] = UniPoly(inv0);
    for (int k = 1; k < n; ++k) {
        UniPoly acc;
        for (int j = 1; j <= k; ++j)
            if (!s[j].is_zero()) acc += s[j] * r[k - j];
        r[k] = acc * (-inv0);
    }
    return r;
}

USeries series_sqrt(const USeries& s) {
    if (s[0] != UniPoly(1)) throw std::domain_error("series_sqrt: constant term must be 1");
    const int n = s.order();
    USeries r = USeries::constant(n, UniPoly(1));
    const Rational half(1, 2);
    const int steps = ceil_log2(n) + 1;
    for (int it = 0; it < steps; ++it) r = (r + s * series_inverse(r)) * half;
    return r;
}

USeries series_substitute_u(const USeries& s, const USeries& inner) {
    require_same_order(s, inner);
    if (!inner[0].is_zero()) throw std::domain_error("series_substitute_u: inner series has nonzero constant term");
    const int n = s.order();
    USeries r = USeries::constant(n, s[n - 1]);
    for (int k = n - 2; k >= 0; --k) {
        r = r * inner;
        r[0] += s[k];
    }
    return r;
}

USeries series_rescale_t_by_u(const USeries& s) {
    const int n = s.order();
    USeries r(n);
    for (int k = 0; k < n; ++k)
        for (long i = 0; i <= s[k].degree(); ++i)
            if (k + i < n) r[static_cast<int>(k + i)] += UniPoly::monomial(s[k].coeff(i), i);
    return r;
}

USeries series_shift_down(const USeries& s) {
    UKL_INVARIANT(s[0].is_zero(), "shift by u^-1 of a series with nonzero u^0 coefficient");
    if (s.order() < 2) throw std::domain_error("series_shift_down: order too small");
    return USeries(s.order() - 1, std::vector<UniPoly>(s.coeffs().begin() + 1, s.coeffs().end()));
}

USeries phi_from_table(int order) {
    USeries phi(order);
    for (int n = 2; n <= order; ++n) phi[n - 1] = kl_poly(n);
    return phi;
}

USeries beckwith_f(int order) {
    const UniPoly a = UniPoly(2) * UniPoly::t() + UniPoly(1);  // 2t + 1
    // 1 - 2(2t+1)u + u^2
    const USeries radicand(order, {UniPoly(1), Rational(-2) * a, UniPoly(1)});
    USeries numer = USeries::monomial(order, a, 1) + series_sqrt(radicand) - USeries::constant(order, UniPoly(1));
    numer = numer * Rational(2);
    // Denominator 1 - (2t+1)^2 = -4t(t+1); every coefficient must be divisible by it.
    const UniPoly denom = UniPoly(1) - a * a;
    USeries f(order);
    for (int k = 0; k < order; ++k) {
        f[k] = numer[k].divide_exact(denom);
        UKL_INVARIANT(f[k].has_integer_coeffs(), "non-integral dissection count");
    }
    return f;
}

USeries g_series(int order) {
    // One extra slot: the u^{order-1} coefficient of g is the u^order coefficient of f(tu, u).
    return series_shift_down(series_rescale_t_by_u(beckwith_f(order + 1)));
}

USeries functional_equation_residual(const USeries& phi) {
    const int n = phi.order();
    USeries lhs(n);
    for (int k = 0; k < n; ++k) {
        if (phi[k].is_zero()) continue;
        if (phi[k].degree() > k) throw std::domain_error("functional equation: coefficient degree exceeds u-exponent");
        lhs[k] = phi[k].reversed(k);
    }

    const USeries d = moebius_denominator(n);
    const USeries d_inv = series_inverse(d);
    const USeries one_plus_u(n, {UniPoly(1), UniPoly(1)});
    const USeries tu_minus_u = USeries::monomial(n, UniPoly::t() - UniPoly(1), 1);
    const USeries inner = USeries::monomial(n, UniPoly(1), 1) * d_inv;  // u / (1 - tu + u)

    const USeries rhs = tu_minus_u * series_inverse(d * one_plus_u) + d_inv * d_inv * series_substitute_u(phi, inner);
    return lhs - rhs;
}

USeries check_functional_equation(int order) {
    return functional_equation_residual(phi_from_table(order));
}

}  // namespace uniform_kl
