#include "uniform_kl/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace uniform_kl {

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) {
        coeffs_.push_back(c);
        coeffs_.back().canonicalize();
    }
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

UniPoly UniPoly::monomial(const Rational& c, long exponent) {
    if (exponent < 0) throw std::domain_error("UniPoly::monomial: negative exponent");
    std::vector<Rational> v(static_cast<size_t>(exponent) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(long i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

long UniPoly::t_valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<long>(i);
    return -1;
}

bool UniPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

UniPoly UniPoly::reversed(long d) const {
    if (d < degree()) throw std::domain_error("UniPoly::reversed: degree bound too small");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(d) + 1);
    for (long i = 0; i <= degree(); ++i) v[static_cast<size_t>(d - i)] = coeffs_[static_cast<size_t>(i)];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::divide_by_t_power(long k) const {
    if (is_zero()) return {};
    UKL_INVARIANT(t_valuation() >= k, "polynomial not divisible by requested power of t");
    return UniPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

UniPoly UniPoly::shifted(long k) const {
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero");
    std::vector<Rational> rem = coeffs_;
    const long dd = divisor.degree();
    const Rational lead = divisor.coeffs_.back();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> quot(static_cast<size_t>(degree() - dd) + 1);
    for (long k = degree() - dd; k >= 0; --k) {
        const Rational q = rem[static_cast<size_t>(k + dd)] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * divisor.coeffs_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    UKL_INVARIANT(r.is_zero(), "inexact polynomial division");
    return q;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(v);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(1);
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= degree(); ++i) {
        Rational c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0 || a != 1) os << a;
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace uniform_kl
