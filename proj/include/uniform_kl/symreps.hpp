#pragma once

#include "uniform_kl/arith.hpp"
#include "uniform_kl/partition.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

namespace uniform_kl {

/// dim V_lambda = |lambda|! / prod(hook lengths).
BigInt hook_dimension(const Partition& lambda);

/// Littlewood-Richardson coefficient c^nu_{mu,lambda}: the number of
/// semistandard fillings of nu/lambda with content mu whose reverse reading
/// word is a lattice word.
BigInt lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda);

/// Element of the virtual representation ring of S_n: a signed integer
/// combination of irreducibles V_lambda with |lambda| = n.
class VirtualRep {
public:
    explicit VirtualRep(int n) : n_(n) {}
    static VirtualRep irreducible(const Partition& lambda, const BigInt& mult = 1);
    /// V_lambda if `lambda` is present, otherwise the zero representation of S_n.
    static VirtualRep irreducible_or_zero(int n, const std::optional<Partition>& lambda);

    int degree() const { return n_; }
    const std::map<Partition, BigInt>& terms() const { return terms_; }
    BigInt multiplicity(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }
    /// The sole irreducible if this is exactly V_lambda with multiplicity one.
    std::optional<Partition> as_irreducible() const;
    /// sum of mult(lambda) * dim V_lambda.
    BigInt dimension() const;

    /// Adds c * V_lambda; zero multiplicities are removed.
    void add(const Partition& lambda, const BigInt& c);
    VirtualRep& operator+=(const VirtualRep& o);
    VirtualRep& operator-=(const VirtualRep& o);
    VirtualRep& operator*=(const BigInt& c);
    friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
    friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
    friend VirtualRep operator*(VirtualRep a, const BigInt& c) { return a *= c; }
    friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

    /// "V[4] - 2 V[3,1]"; "0" for the zero representation.
    std::string to_string() const;

private:
    int n_;
    std::map<Partition, BigInt> terms_;
};

/// Ind_{S_a x S_b}^{S_{a+b}} (V_mu boxtimes V_lambda) = sum_nu c^nu_{mu,lambda} V_nu.
VirtualRep induce_product(const Partition& mu, const Partition& lambda);
/// Bilinear extension to virtual representations.
VirtualRep induce_product(const VirtualRep& a, const VirtualRep& b);

/// Exterior power of the permutation representation:
/// wedge^k rho_m = V_[m-k, 1^k] + V_[m-k+1, 1^{k-1}], invalid shapes dropping out.
/// m = 0 is accepted and gives the trivial representation of S_0 for k = 0.
VirtualRep exterior_rho(int m, int k);

/// The categorified recursion for IH^{2i}(X_n) as a virtual S_n representation,
/// memoized on (n, i). Lower groups are used exactly as the recursion returns
/// them; nothing assumes they are irreducible.
class IhEngine {
public:
    const VirtualRep& get(int n, int i);

    /// The single (p, q) summand (-1)^{p+q} Ind(wedge^{2i-p-q} rho_{n-p-1} boxtimes IH^{2(i-q)}(X_{p+1})).
    VirtualRep summand(int n, int i, int p, int q);

private:
    VirtualRep compute(int n, int i);
    std::map<std::pair<int, int>, VirtualRep> memo_;
    std::recursive_mutex mutex_;
};

/// ih_rep through a process-wide engine.
VirtualRep ih_rep(int n, int i);

struct Main2Result {
    bool holds = false;
    Partition expected;     // [n - 2i, 2^i]
    VirtualRep actual{0};
};

/// True iff ih_rep(n, i) is exactly V_[n-2i, 2^i]. Requires 2i < n - 1.
Main2Result verify_main2(int n, int i, IhEngine& engine);
Main2Result verify_main2(int n, int i);

struct LemmaKeyResult {
    BigInt mult_mu;        // c^nu_{mu, lambda}
    BigInt mult_mu_prime;  // c^nu_{mu', lambda}
    bool expected_nonzero = false;  // i > 0, p = 2i - 1, q = 1
    bool matches = false;
};

/// Multiplicities of V_[n-2i,2^i] in the two Ind summands attached to (p, q).
/// Throws std::domain_error unless 0 <= i < (n-1)/2, 0 < p < n and 0 <= q <= min(i, 2i - p).
LemmaKeyResult lemma_key_check(int n, int i, int p, int q);

/// True when every p = n - 1 summand of the recursion vanishes for (n, i).
bool top_summands_vanish(int n, int i);

}  // namespace uniform_kl
