#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uniform_kl/kl_numbers.hpp"
#include "uniform_kl/symreps.hpp"

#include <map>
#include <thread>

using namespace uniform_kl;

namespace {

Partition P(std::initializer_list<long> parts) { return Partition::of(std::vector<long>(parts)); }

// Number of standard Young tableaux via removal of corners.
BigInt syt_count(const Partition& lambda, std::map<Partition, BigInt>& memo) {
    if (lambda.size() <= 1) return 1;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    BigInt total = 0;
    std::vector<long> rows(lambda.parts().begin(), lambda.parts().end());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r + 1 < rows.size() && rows[r + 1] == rows[r]) continue;  // not a corner
        --rows[r];
        total += syt_count(Partition::of(rows), memo);
        ++rows[r];
    }
    memo.emplace(lambda, total);
    return total;
}

// Enumerates every filling of nu/lambda with entries 1..len(mu) and tests the
// LR conditions directly on the finished tableau.
BigInt lr_bruteforce(const Partition& nu, const Partition& mu, const Partition& lambda) {
    if (mu.size() + lambda.size() != nu.size() || !nu.contains(lambda)) return 0;
    std::vector<Cell> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = lambda.row(r); c < nu.row(r); ++c) cells.push_back({r, c});
    if (cells.empty()) return 1;
    const int letters = mu.length();
    if (letters == 0) return 0;
    std::vector<int> fill(cells.size(), 1);
    auto value = [&](int r, int c) -> int {
        for (size_t k = 0; k < cells.size(); ++k)
            if (cells[k].row == r && cells[k].col == c) return fill[k];
        return 0;
    };
    BigInt count = 0;
    while (true) {
        bool ok = true;
        std::vector<int> content(static_cast<size_t>(letters) + 1, 0);
        for (size_t k = 0; k < cells.size() && ok; ++k) {
            auto [r, c] = cells[k];
            ++content[static_cast<size_t>(fill[k])];
            if (c > lambda.row(r) && value(r, c - 1) > fill[k]) ok = false;
            if (r > 0 && c >= lambda.row(r - 1) && value(r - 1, c) >= fill[k]) ok = false;
        }
        for (int v = 1; v <= letters && ok; ++v) ok = content[static_cast<size_t>(v)] == mu.row(v - 1);
        if (ok) {
            std::vector<int> seen(static_cast<size_t>(letters) + 2, 0);
            for (int r = 0; r < nu.length() && ok; ++r)
                for (int c = nu.row(r) - 1; c >= lambda.row(r) && ok; --c) {
                    int v = value(r, c);
                    ++seen[static_cast<size_t>(v)];
                    if (v > 1 && seen[static_cast<size_t>(v)] > seen[static_cast<size_t>(v - 1)]) ok = false;
                }
        }
        if (ok) ++count;
        size_t k = 0;
        while (k < fill.size() && fill[k] == letters) fill[k++] = 1;
        if (k == fill.size()) break;
        ++fill[k];
    }
    return count;
}

}  // namespace

TEST_CASE("hook dimensions") {
    CHECK(hook_dimension(P({7})) == 1);
    CHECK(hook_dimension(P({2, 2})) == 2);
    CHECK(hook_dimension(P({2, 2, 2})) == 5);
    CHECK(hook_dimension(P({2, 2, 2})) == c_closed(6, 2));
    CHECK(hook_dimension(P({2, 2, 2, 2})) == factorial(8) / (5 * 4 * 4 * 3 * 3 * 2 * 2 * 1));
    CHECK(hook_dimension(Partition()) == 1);
    std::map<Partition, BigInt> memo;
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) REQUIRE(hook_dimension(p) == syt_count(p, memo));
}

TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 1; n <= 10; ++n) {
        BigInt s = 0;
        for (const auto& p : partitions_of(n)) s += hook_dimension(p) * hook_dimension(p);
        REQUIRE(s == factorial(n));
    }
}

TEST_CASE("Littlewood-Richardson examples") {
    CHECK(lr_coefficient(P({3, 1}), Partition(), P({3, 1})) == 1);
    CHECK(lr_coefficient(P({2, 2}), P({2}), P({2})) == 1);
    CHECK(lr_coefficient(P({2, 1, 1}), P({2}), P({2})) == 0);
    CHECK(lr_coefficient(P({8, 2, 2, 2, 2, 2, 2}), P({10, 1}), P({3, 2, 2, 2})) == 0);
    CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
    CHECK(lr_coefficient(P({4}), P({2}), P({1})) == 0);  // sizes disagree
    CHECK(lr_coefficient(P({2}), P({1}), P({1, 1})) == 0);  // not contained
}

TEST_CASE("LR backtracking matches exhaustive fillings") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& nu : partitions_of(n))
            for (int b = 0; b <= n; ++b)
                for (const auto& lambda : partitions_of(b)) {
                    if (!nu.contains(lambda)) continue;
                    for (const auto& mu : partitions_of(n - b)) {
                        CAPTURE(nu.to_string());
                        CAPTURE(mu.to_string());
                        CAPTURE(lambda.to_string());
                        REQUIRE(lr_coefficient(nu, mu, lambda) == lr_bruteforce(nu, mu, lambda));
                    }
                }
}

TEST_CASE("induction products") {
    CHECK(induce_product(Partition(), P({3, 1})) == VirtualRep::irreducible(P({3, 1})));
    VirtualRep a = induce_product(P({2}), P({2}));
    CHECK(a == VirtualRep::irreducible(P({4})) + VirtualRep::irreducible(P({3, 1})) +
                   VirtualRep::irreducible(P({2, 2})));
    CHECK(a.dimension() == 6);
    CHECK(induce_product(P({1, 1}), P({2})) ==
          VirtualRep::irreducible(P({3, 1})) + VirtualRep::irreducible(P({2, 1, 1})));
    // bilinear extension
    VirtualRep x = VirtualRep::irreducible(P({2})) - VirtualRep::irreducible(P({1, 1}));
    VirtualRep y = VirtualRep::irreducible(P({1})) * BigInt(3);
    CHECK(induce_product(x, y) == (induce_product(P({2}), P({1})) - induce_product(P({1, 1}), P({1}))) * BigInt(3));
}

TEST_CASE("exterior powers of the permutation representation") {
    CHECK(exterior_rho(4, 0) == VirtualRep::irreducible(P({4})));
    CHECK(exterior_rho(4, 1) == VirtualRep::irreducible(P({4})) + VirtualRep::irreducible(P({3, 1})));
    CHECK(exterior_rho(2, 2) == VirtualRep::irreducible(P({1, 1})));
    CHECK(exterior_rho(5, 5) == VirtualRep::irreducible(P({1, 1, 1, 1, 1})));
    CHECK(exterior_rho(4, 5).is_zero());
    CHECK(exterior_rho(4, -1).is_zero());
    CHECK(exterior_rho(0, 0) == VirtualRep::irreducible(Partition()));
    for (int m = 1; m <= 12; ++m)
        for (int k = 0; k <= m; ++k) REQUIRE(exterior_rho(m, k).dimension() == binomial(m, k));
}

TEST_CASE("VirtualRep arithmetic") {
    VirtualRep v(3);
    v.add(P({2, 1}), 2);
    v.add(P({3}), -1);
    CHECK(v.to_string() == "-V[3] + 2 V[2,1]");
    CHECK(v.dimension() == 3);
    CHECK_FALSE(v.as_irreducible());
    v.add(P({3}), 1);
    CHECK(v.terms().size() == 1);
    CHECK((v - v).is_zero());
    CHECK((v - v).to_string() == "0");
    CHECK_THROWS_AS(v.add(P({2}), 1), std::invalid_argument);
    CHECK_THROWS_AS(v += VirtualRep(4), std::invalid_argument);
}

TEST_CASE("ih_rep examples") {
    CHECK(ih_rep(2, 0) == VirtualRep::irreducible(P({2})));
    CHECK(ih_rep(5, 2).is_zero());
    CHECK(ih_rep(4, 1) == VirtualRep::irreducible(P({2, 2})));
    CHECK(ih_rep(3, 0) == VirtualRep::irreducible(P({3})));
}

TEST_CASE("ih_rep(4,1) term by term") {
    IhEngine e;
    VirtualRep first = exterior_rho(4, 1) * BigInt(-1);
    CHECK(first == (VirtualRep::irreducible(P({4})) + VirtualRep::irreducible(P({3, 1}))) * BigInt(-1));
    CHECK(e.summand(4, 1, 1, 0).is_zero());  // IH^2(X_2) = 0
    CHECK(e.summand(4, 1, 1, 1) == induce_product(P({2}), P({2})));
    CHECK(e.summand(4, 1, 2, 0).is_zero());  // IH^2(X_3) = 0
    CHECK(first + e.summand(4, 1, 1, 1) == VirtualRep::irreducible(P({2, 2})));
    CHECK_THROWS_AS(e.summand(4, 1, 3, 0), std::domain_error);
    CHECK_THROWS_AS(e.summand(4, 1, 1, 2), std::domain_error);
}

TEST_CASE("verify_main2 examples") {
    auto r = verify_main2(2, 0);
    CHECK(r.holds);
    auto r41 = verify_main2(4, 1);
    CHECK(r41.holds);
    CHECK(r41.expected == P({2, 2}));
    auto r145 = verify_main2(14, 5);
    CHECK(r145.holds);
    CHECK(r145.expected == P({4, 2, 2, 2, 2, 2}));
    CHECK(r145.actual.dimension() == c_closed(14, 5));
    CHECK_THROWS_AS(verify_main2(5, 2), std::domain_error);
}

TEST_CASE("dimension of the recursion output equals c_{n,i}") {
    IhEngine e;
    for (int n = 2; n <= 12; ++n)
        for (int i = 0; i <= n; ++i) REQUIRE(e.get(n, i).dimension() == c_closed(n, i));
}

TEST_CASE("lemma key examples") {
    auto a = lemma_key_check(6, 2, 3, 1);
    CHECK(a.mult_mu == 1);
    CHECK(a.mult_mu_prime == 0);
    CHECK(a.expected_nonzero);
    CHECK(a.matches);
    auto b = lemma_key_check(6, 2, 2, 0);
    CHECK(b.mult_mu == 0);
    CHECK(b.mult_mu_prime == 0);
    CHECK(b.matches);
    auto c = lemma_key_check(20, 6, 8, 3);
    CHECK(c.mult_mu == 0);
    CHECK(c.mult_mu_prime == 0);
    CHECK(c.matches);
    CHECK_THROWS_AS(lemma_key_check(6, 3, 1, 0), std::domain_error);
    CHECK_THROWS_AS(lemma_key_check(6, 2, 6, 0), std::domain_error);
    CHECK_THROWS_AS(lemma_key_check(6, 2, 3, 2), std::domain_error);
    for (int n = 3; n <= 12; ++n)
        for (int i = 0; 2 * i < n - 1; ++i) CHECK(top_summands_vanish(n, i));
}

TEST_CASE("concurrent readers of one engine agree") {
    IhEngine e;
    std::vector<VirtualRep> out(4, VirtualRep(0));
    std::vector<std::thread> ts;
    for (int k = 0; k < 4; ++k) ts.emplace_back([&, k] { out[static_cast<size_t>(k)] = e.get(11, 4); });
    for (auto& t : ts) t.join();
    for (const auto& v : out) CHECK(v == VirtualRep::irreducible(P({3, 2, 2, 2, 2})));
}
