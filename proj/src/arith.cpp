#include "uniform_kl/arith.hpp"

#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace uniform_kl {

namespace detail {
void invariant_failure(const char* what, const char* file, int line) {
    std::fprintf(stderr, "uniform_kl: invariant violated at %s:%d: %s\n", file, line, what);
    std::abort();
}
}  // namespace detail

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(long n, std::span<const long> parts) {
    if (std::accumulate(parts.begin(), parts.end(), 0L) != n)
        throw std::domain_error("multinomial: parts do not sum to n");
    for (long p : parts)
        if (p < 0) return 0;
    // Product of successive binomials avoids the large factorial quotient.
    BigInt r = 1;
    long used = 0;
    for (long p : parts) {
        used += p;
        r *= binomial(used, p);
    }
    return r;
}

BigInt multinomial(long n, std::initializer_list<long> parts) {
    return multinomial(n, std::span<const long>(parts.begin(), parts.size()));
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    UKL_INVARIANT(den != 0, "division by zero");
    UKL_INVARIANT(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "inexact integer division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace uniform_kl
