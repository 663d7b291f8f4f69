#include "uniform_kl/symreps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace uniform_kl {

BigInt hook_dimension(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.row(r); ++c) hooks *= (lambda.row(r) - c - 1) + (conj.row(c) - r - 1) + 1;
    return exact_div(factorial(lambda.size()), hooks);
}

namespace {

// Backtracking over the skew cells in reverse reading order (rows top to
// bottom, each row right to left), maintaining the content tally so the
// lattice condition is checked on every prefix.
class LrCounter {
public:
    LrCounter(const Partition& nu, const Partition& mu, const Partition& lambda)
        : nu_(nu), mu_(mu), lambda_(lambda) {
        for (int r = 0; r < nu.length(); ++r)
            for (int c = nu.row(r) - 1; c >= lambda.row(r); --c) cells_.push_back({r, c});
        grid_.resize(static_cast<size_t>(nu.length()));
        for (int r = 0; r < nu.length(); ++r) grid_[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.row(r)), 0);
        used_.assign(static_cast<size_t>(mu.length()) + 1, 0);
    }

    BigInt count() {
        total_ = 0;
        place(0);
        return total_;
    }

private:
    void place(size_t idx) {
        if (idx == cells_.size()) {
            ++total_;
            return;
        }
        const auto [r, c] = cells_[idx];
        int hi = mu_.length();
        // Weakly increasing rows: bounded by the already-filled cell to the right.
        if (c + 1 < nu_.row(r)) hi = std::min(hi, at(r, c + 1));
        int lo = 1;
        // Strictly increasing columns, only against skew cells above.
        if (r > 0 && c >= lambda_.row(r - 1)) lo = at(r - 1, c) + 1;
        for (int v = lo; v <= hi; ++v) {
            const auto uv = static_cast<size_t>(v);
            if (used_[uv] >= mu_.row(v - 1)) continue;
            if (v > 1 && used_[uv - 1] <= used_[uv]) continue;
            ++used_[uv];
            grid_[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            place(idx + 1);
            --used_[uv];
        }
        grid_[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }

    int at(int r, int c) const { return grid_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

    const Partition& nu_;
    const Partition& mu_;
    const Partition& lambda_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> used_;
    BigInt total_;
};

}  // namespace

BigInt lr_coefficient(const Partition& nu, const Partition& mu, const Partition& lambda) {
    if (mu.size() + lambda.size() != nu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    return LrCounter(nu, mu, lambda).count();
}

VirtualRep VirtualRep::irreducible(const Partition& lambda, const BigInt& mult) {
    VirtualRep v(lambda.size());
    v.add(lambda, mult);
    return v;
}

VirtualRep VirtualRep::irreducible_or_zero(int n, const std::optional<Partition>& lambda) {
    VirtualRep v(n);
    if (lambda) v.add(*lambda, 1);
    return v;
}

BigInt VirtualRep::multiplicity(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<Partition> VirtualRep::as_irreducible() const {
    if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
    return terms_.begin()->first;
}

BigInt VirtualRep::dimension() const {
    BigInt d = 0;
    for (const auto& [lambda, m] : terms_) d += m * hook_dimension(lambda);
    return d;
}

void VirtualRep::add(const Partition& lambda, const BigInt& c) {
    if (lambda.size() != n_) throw std::invalid_argument("VirtualRep: partition of the wrong size");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
    if (o.n_ != n_) throw std::invalid_argument("VirtualRep: degree mismatch");
    for (const auto& [lambda, m] : o.terms_) add(lambda, m);
    return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
    if (o.n_ != n_) throw std::invalid_argument("VirtualRep: degree mismatch");
    for (const auto& [lambda, m] : o.terms_) add(lambda, -m);
    return *this;
}

VirtualRep& VirtualRep::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, m] : terms_) m *= c;
    return *this;
}

std::string VirtualRep::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Largest partitions first, matching the usual dominance-style listing.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [lambda, m] = *it;
        if (first) {
            if (m < 0) os << "-";
        } else {
            os << (m < 0 ? " - " : " + ");
        }
        BigInt a = abs(m);
        if (a != 1) os << a << " ";
        os << "V" << lambda.to_string();
        first = false;
    }
    return os.str();
}

VirtualRep induce_product(const Partition& mu, const Partition& lambda) {
    const int n = mu.size() + lambda.size();
    VirtualRep out(n);
    for (const auto& nu : partitions_of(n)) {
        if (!nu.contains(lambda) || !nu.contains(mu)) continue;
        out.add(nu, lr_coefficient(nu, mu, lambda));
    }
    return out;
}

VirtualRep induce_product(const VirtualRep& a, const VirtualRep& b) {
    VirtualRep out(a.degree() + b.degree());
    for (const auto& [mu, ma] : a.terms())
        for (const auto& [lambda, mb] : b.terms()) out += induce_product(mu, lambda) * BigInt(ma * mb);
    return out;
}

VirtualRep exterior_rho(int m, int k) {
    if (m < 0) throw std::domain_error("exterior_rho: negative degree");
    VirtualRep out(m);
    if (k < 0 || k > m) return out;
    out += VirtualRep::irreducible_or_zero(m, Partition::hook(m - k, k));
    out += VirtualRep::irreducible_or_zero(m, Partition::hook(m - k + 1, k - 1));
    return out;
}

const VirtualRep& IhEngine::get(int n, int i) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    VirtualRep v = compute(n, i);
    return memo_.emplace(key, std::move(v)).first->second;
}

VirtualRep IhEngine::summand(int n, int i, int p, int q) {
    if (p <= 0 || p >= n - 1) throw std::domain_error("IhEngine::summand: need 0 < p < n - 1");
    if (q < 0 || q > std::min(i, 2 * i - p)) throw std::domain_error("IhEngine::summand: q out of range");
    const VirtualRep ext = exterior_rho(n - p - 1, 2 * i - p - q);
    if (ext.is_zero()) return VirtualRep(n);
    const VirtualRep& lower = get(p + 1, i - q);
    if (lower.is_zero()) return VirtualRep(n);
    return induce_product(ext, lower) * BigInt(sign_power(p + q));
}

VirtualRep IhEngine::compute(int n, int i) {
    if (n < 2) throw std::domain_error("ih_rep: n must be at least 2");
    VirtualRep out(n);
    if (i < 0 || 2 * i >= n - 1) return out;
    out += exterior_rho(n, i) * BigInt(sign_power(i));
    for (int p = 1; p < n - 1; ++p)
        for (int q = 0; q <= std::min(i, 2 * i - p); ++q) out += summand(n, i, p, q);
    return out;
}

VirtualRep ih_rep(int n, int i) {
    static IhEngine engine;
    return engine.get(n, i);
}

Main2Result verify_main2(int n, int i, IhEngine& engine) {
    if (i < 0 || 2 * i >= n - 1) throw std::domain_error("verify_main2: need 0 <= i and 2i < n - 1");
    Main2Result r;
    r.expected = *Partition::two_column_tail(n - 2 * i, i);
    r.actual = engine.get(n, i);
    auto irr = r.actual.as_irreducible();
    r.holds = irr && *irr == r.expected;
    return r;
}

Main2Result verify_main2(int n, int i) {
    IhEngine engine;
    return verify_main2(n, i, engine);
}

LemmaKeyResult lemma_key_check(int n, int i, int p, int q) {
    if (i < 0 || 2 * i >= n - 1) throw std::domain_error("lemma_key_check: need 0 <= i < (n-1)/2");
    if (p <= 0 || p >= n) throw std::domain_error("lemma_key_check: need 0 < p < n");
    if (q < 0 || q > std::min(i, 2 * i - p)) throw std::domain_error("lemma_key_check: need 0 <= q <= min(i, 2i-p)");

    const Partition nu = *Partition::two_column_tail(n - 2 * i, i);
    const auto lambda = Partition::two_column_tail(p + 2 * q - 2 * i + 1, i - q);
    const auto mu = Partition::hook(n + q - 2 * i - 1, 2 * i - p - q);
    const auto mu_prime = Partition::hook(n + q - 2 * i, 2 * i - p - q - 1);

    LemmaKeyResult r;
    if (lambda && mu) r.mult_mu = lr_coefficient(nu, *mu, *lambda);
    if (lambda && mu_prime) r.mult_mu_prime = lr_coefficient(nu, *mu_prime, *lambda);
    r.expected_nonzero = i > 0 && p == 2 * i - 1 && q == 1;
    r.matches = r.mult_mu == (r.expected_nonzero ? 1 : 0) && r.mult_mu_prime == 0;
    return r;
}

bool top_summands_vanish(int n, int i) {
    const int p = n - 1;
    for (int q = 0; q <= std::min(i, 2 * i - p); ++q)
        if (!exterior_rho(n - p - 1, 2 * i - p - q).is_zero()) return false;
    return true;
}

}  // namespace uniform_kl
