#include "uniform_kl/chords.hpp"

#include <algorithm>
#include <string>

namespace uniform_kl {

bool crosses(const Diagonal& x, const Diagonal& y) {
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

std::vector<Diagonal> polygon_diagonals(int m) {
    std::vector<Diagonal> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b)
            if (b - a != m - 1) out.push_back({a, b});
    return out;
}

std::optional<ChordSet> ChordSet::make(int m, std::vector<Diagonal> diagonals) {
    if (m < 3) return std::nullopt;
    for (const auto& d : diagonals) {
        if (d.a < 0 || d.b > m - 1 || d.a >= d.b) return std::nullopt;
        if (d.b - d.a == 1 || d.b - d.a == m - 1) return std::nullopt;
    }
    std::sort(diagonals.begin(), diagonals.end());
    if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end()) return std::nullopt;
    for (size_t x = 0; x < diagonals.size(); ++x)
        for (size_t y = x + 1; y < diagonals.size(); ++y)
            if (crosses(diagonals[x], diagonals[y])) return std::nullopt;
    return ChordSet(m, std::move(diagonals));
}

BigInt d_cayley(long m, long k) {
    if (m < 3) throw std::domain_error("d_cayley: m must be at least 3");
    if (k < 0 || k > m - 3) return 0;
    return exact_div(binomial(m - 3, k) * binomial(m + k - 1, k), k + 1);
}

namespace {

void check_cap(int m, int cap) {
    if (m < 3) throw std::domain_error("chord enumeration: m must be at least 3");
    if (m > cap)
        throw ResourceError("chord enumeration: m=" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
}

class ChordEnumerator {
public:
    explicit ChordEnumerator(int m) : diags_(polygon_diagonals(m)) {
        compatible_.assign(diags_.size(), std::vector<char>(diags_.size(), 1));
        for (size_t x = 0; x < diags_.size(); ++x)
            for (size_t y = 0; y < diags_.size(); ++y)
                compatible_[x][y] = !crosses(diags_[x], diags_[y]);
    }

    // Tallies every non-crossing set by size, or only sets of size `target` if given.
    std::vector<unsigned long long> run(std::optional<size_t> target) {
        counts_.assign(diags_.size() + 1, 0);
        target_ = target;
        chosen_.clear();
        extend(0);
        return counts_;
    }

private:
    void extend(size_t next) {
        if (!target_ || chosen_.size() == *target_) {
            ++counts_[chosen_.size()];
            if (target_) return;
        }
        if (target_ && diags_.size() - next < *target_ - chosen_.size()) return;
        for (size_t d = next; d < diags_.size(); ++d) {
            bool ok = std::all_of(chosen_.begin(), chosen_.end(),
                                  [&](size_t c) { return compatible_[c][d] != 0; });
            if (!ok) continue;
            chosen_.push_back(d);
            extend(d + 1);
            chosen_.pop_back();
        }
    }

    std::vector<Diagonal> diags_;
    std::vector<std::vector<char>> compatible_;
    std::vector<size_t> chosen_;
    std::vector<unsigned long long> counts_;
    std::optional<size_t> target_;
};

}  // namespace

BigInt d_bruteforce(int m, int k, int cap) {
    check_cap(m, cap);
    if (k < 0) return 0;
    ChordEnumerator e(m);
    auto counts = e.run(static_cast<size_t>(k));
    if (static_cast<size_t>(k) >= counts.size()) return 0;
    return BigInt(std::to_string(counts[static_cast<size_t>(k)]));
}

std::vector<BigInt> d_bruteforce_all(int m, int cap) {
    check_cap(m, cap);
    ChordEnumerator e(m);
    auto counts = e.run(std::nullopt);
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    std::vector<BigInt> out;
    for (auto c : counts) out.emplace_back(std::to_string(c));
    return out;
}

}  // namespace uniform_kl
