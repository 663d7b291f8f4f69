#pragma once

#include "uniform_kl/arith.hpp"

#include <optional>
#include <vector>

namespace uniform_kl {

/// Diagonal {a, b} of a convex m-gon with vertices labelled 0..m-1, a < b.
struct Diagonal {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Proper crossing of two chords; shared endpoints do not cross.
bool crosses(const Diagonal& x, const Diagonal& y);

/// All diagonals of the m-gon in lexicographic order.
std::vector<Diagonal> polygon_diagonals(int m);

/// A set of pairwise non-crossing diagonals of a convex m-gon.
class ChordSet {
public:
    /// Returns std::nullopt if some pair is an edge, out of range, repeated, or crossing.
    static std::optional<ChordSet> make(int m, std::vector<Diagonal> diagonals);

    int m() const { return m_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    size_t size() const { return diagonals_.size(); }

private:
    ChordSet(int m, std::vector<Diagonal> d) : m_(m), diagonals_(std::move(d)) {}
    int m_;
    std::vector<Diagonal> diagonals_;
};

inline constexpr int kDefaultChordCap = 12;

/// d_{m,k} = C(m-3, k) C(m+k-1, k) / (k + 1).
BigInt d_cayley(long m, long k);

/// Counts k-element ChordSets of the m-gon by backtracking over diagonals in
/// lexicographic order. Throws ResourceError when m exceeds `cap`.
BigInt d_bruteforce(int m, int k, int cap = kDefaultChordCap);

/// The counts d_{m,0}, d_{m,1}, ... from a single enumeration pass.
std::vector<BigInt> d_bruteforce_all(int m, int cap = kDefaultChordCap);

}  // namespace uniform_kl
