#include "uniform_kl/kl_numbers.hpp"

#include <string>

namespace uniform_kl {

BigInt c_closed(long n, long i) {
    if (n < 2) throw std::domain_error("c_closed: n must be at least 2");
    if (i < 0) return 0;
    // C(n-i-2, i) with a negative top is zero by convention.
    if (n - i - 2 < 0) return 0;
    return exact_div(binomial(n - i - 2, i) * binomial(n, i), i + 1);
}

KLTable::KLTable(long max_n) : max_n_(max_n) {
    if (max_n < 2) throw std::domain_error("KLTable: max_n must be at least 2");
    rows_.resize(static_cast<size_t>(max_n) + 1);
    for (long n = 2; n <= max_n; ++n) {
        // Filling row n consults only rows < n, which are already complete.
        std::vector<BigInt> row;
        for (long i = 0; !kl_vanishes(n, i); ++i) row.push_back(c_recursion(n, i, *this));
        rows_[static_cast<size_t>(n)] = std::move(row);
    }
}

BigInt KLTable::at(long n, long i) const {
    if (n < 2) throw std::domain_error("KLTable::at: n must be at least 2");
    if (kl_vanishes(n, i)) return 0;
    if (n > max_n_) throw std::out_of_range("KLTable::at: n=" + std::to_string(n) + " beyond table");
    const auto& row = rows_[static_cast<size_t>(n)];
    UKL_INVARIANT(static_cast<size_t>(i) < row.size(), "KLTable row not yet populated");
    return row[static_cast<size_t>(i)];
}

const std::vector<BigInt>& KLTable::row(long n) const {
    if (n < 2 || n > max_n_) throw std::out_of_range("KLTable::row: n out of range");
    return rows_[static_cast<size_t>(n)];
}

BigInt c_recursion(long n, long i, const KLTable& table) {
    if (n < 2) throw std::domain_error("c_recursion: n must be at least 2");
    if (kl_vanishes(n, i)) return 0;
    return c_recursion_formula(n, i, table);
}

BigInt c_recursion_formula(long n, long i, const KLTable& table) {
    if (n < 2) throw std::domain_error("c_recursion_formula: n must be at least 2");
    if (i < 0) return 0;
    BigInt total = sign_power(i) * binomial(n, i);
    for (long j = 0; j <= i - 1; ++j) {
        for (long k = 2 * j + 2; k <= i + j + 1; ++k) {
            BigInt m = multinomial(n, {k, i + j - k + 1, n - i - j - 1});
            if (m == 0) continue;
            BigInt c = table.at(k, j);
            if (c == 0) continue;
            total += sign_power(i + j + k + 1) * m * c;
        }
    }
    return total;
}

BigInt c_recursion(long n, long i) {
    return c_recursion(n, i, KLTable(n));
}

UniPoly kl_poly(long n) {
    if (n < 2) throw std::domain_error("kl_poly: n must be at least 2");
    std::vector<Rational> v;
    for (long i = 0; !kl_vanishes(n, i); ++i) v.emplace_back(c_closed(n, i));
    return UniPoly(std::move(v));
}

Epw2Check check_epw2(long n, const PolySource& source) {
    if (n < 2) throw std::domain_error("check_epw2: n must be at least 2");
    Epw2Check out;
    UniPoly pn = source(n);
    out.lhs = pn.reversed(n - 1);

    const UniPoly t_minus_1 = UniPoly::t() - UniPoly(1);
    UniPoly rhs;
    for (long j = 0; j <= n - 1; ++j) {
        Rational c(sign_power(j) * binomial(n, j));
        rhs += c * (UniPoly::monomial(1, n - j - 1) - UniPoly(1));
    }
    for (long k = 2; k <= n; ++k) {
        const UniPoly pk = (k == n) ? pn : source(k);
        rhs += Rational(binomial(n, k)) * t_minus_1.pow(static_cast<unsigned>(n - k)) * pk;
    }
    out.rhs = rhs;
    out.residual = out.lhs - out.rhs;
    out.holds = out.residual.is_zero();
    return out;
}

LogConcaveReport check_logconcave(long n) {
    if (n < 2) throw std::domain_error("check_logconcave: n must be at least 2");
    LogConcaveReport rep;
    rep.n = n;
    for (long i = 1; i < n / 2 - 1; ++i) {
        LogConcaveTriple tr;
        tr.i = i;
        const BigInt c = c_closed(n, i);
        tr.square = c * c;
        tr.product = c_closed(n, i - 1) * c_closed(n, i + 1);
        tr.margin = tr.square - tr.product;
        tr.strict = tr.margin > 0;
        if (!tr.strict && rep.holds) {
            rep.holds = false;
            rep.first_failure = i;
        }
        rep.triples.push_back(std::move(tr));
    }
    return rep;
}

}  // namespace uniform_kl
