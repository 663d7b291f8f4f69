#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>

namespace uniform_kl {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an enumeration is asked to exceed its configured size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
// Internal invariant violations are bugs, not recoverable errors.
[[noreturn]] void invariant_failure(const char* what, const char* file, int line);
}  // namespace detail

#define UKL_INVARIANT(cond, what)                                             \
    do {                                                                      \
        if (!(cond)) ::uniform_kl::detail::invariant_failure(what, __FILE__, __LINE__); \
    } while (0)

BigInt factorial(long n);

/// C(n, k); zero outside 0 <= k <= n. Throws std::domain_error for n < 0.
BigInt binomial(long n, long k);

/// n! / prod(parts!), or zero if some part is negative.
/// Throws std::domain_error when the parts do not sum to n.
BigInt multinomial(long n, std::span<const long> parts);

BigInt multinomial(long n, std::initializer_list<long> parts);

/// Exact quotient; aborts if `den` does not divide `num`.
BigInt exact_div(const BigInt& num, const BigInt& den);

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace uniform_kl
