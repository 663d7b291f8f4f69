#pragma once

#include "uniform_kl/arith.hpp"
#include "uniform_kl/unipoly.hpp"

#include <functional>
#include <vector>

namespace uniform_kl {

/// True when c_{n,i} vanishes by degree: i < 0 or 2i >= n - 1.
inline bool kl_vanishes(long n, long i) { return i < 0 || 2 * i >= n - 1; }

/// Closed form c_{n,i} = C(n-i-2, i) C(n, i) / (i + 1).
BigInt c_closed(long n, long i);

/// Memoized coefficients c_{n,i} for 2 <= n <= max_n, filled bottom-up in n
/// by the alternating multinomial recursion. Immutable after construction.
class KLTable {
public:
    explicit KLTable(long max_n);

    long max_n() const { return max_n_; }
    /// c_{n,i} with the vanishing convention applied. Throws std::out_of_range for n > max_n.
    BigInt at(long n, long i) const;
    /// The stored (non-vanishing) coefficients of P_n, lowest degree first.
    const std::vector<BigInt>& row(long n) const;

private:
    long max_n_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[n] holds i = 0 .. ceil((n-1)/2) - 1
};

/// Evaluates the alternating multinomial recursion for c_{n,i}, reading lower
/// coefficients from `table` (which must reach n - 1). Returns 0 for 2i >= n - 1:
/// the recursion holds only below the vanishing bound.
BigInt c_recursion(long n, long i, const KLTable& table);
/// The alternating sum itself, without the vanishing short-circuit.
BigInt c_recursion_formula(long n, long i, const KLTable& table);
/// Convenience overload that builds its own table.
BigInt c_recursion(long n, long i);

/// P_n(t) from the closed form.
UniPoly kl_poly(long n);

struct Epw2Check {
    bool holds = false;
    UniPoly lhs;       // t^{n-1} P_n(1/t)
    UniPoly rhs;
    UniPoly residual;  // lhs - rhs
};

using PolySource = std::function<UniPoly(long)>;

/// Checks t^{n-1} P_n(1/t) = sum_j (-1)^j C(n,j)(t^{n-j-1} - 1) + sum_{k>=2} C(n,k)(t-1)^{n-k} P_k(t).
/// `source` supplies P_k; by default the closed form.
Epw2Check check_epw2(long n, const PolySource& source = kl_poly);

struct LogConcaveTriple {
    long i = 0;
    BigInt square;   // c_{n,i}^2
    BigInt product;  // c_{n,i-1} c_{n,i+1}
    BigInt margin;   // square - product
    bool strict = false;
};

struct LogConcaveReport {
    long n = 0;
    std::vector<LogConcaveTriple> triples;  // 0 < i < floor(n/2) - 1
    bool holds = true;
    long first_failure = -1;
};

LogConcaveReport check_logconcave(long n);

}  // namespace uniform_kl
