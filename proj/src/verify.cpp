#include "uniform_kl/verify.hpp"

#include "uniform_kl/chords.hpp"
#include "uniform_kl/kl_numbers.hpp"
#include "uniform_kl/series.hpp"
#include "uniform_kl/symreps.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace uniform_kl {

void VerificationReport::record(std::string inputs, std::string expected, std::string actual, bool pass) {
    cases_.push_back({std::move(inputs), std::move(expected), std::move(actual), pass});
    if (pass) ++passed_;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite: " << suite_ << "\n";
    for (const auto& note : notes_) os << "note: " << note << "\n";
    for (const auto& c : cases_)
        os << (c.pass ? "PASS  " : "FAIL  ") << c.inputs << "  expected=" << c.expected << " actual=" << c.actual
           << "\n";
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", wall_seconds_);
    os << "summary: " << passed_ << " passed, " << failed() << " failed, " << cases_.size() << " total (" << wall
       << " s)\n";
    return os.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["notes"] = notes_;
    auto& arr = j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases_)
        arr.push_back({{"inputs", c.inputs}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["passed"] = passed_;
    j["failed"] = failed();
    j["total"] = cases_.size();
    j["wall_seconds"] = wall_seconds_;
    return j;
}

namespace {

struct SuiteSpec {
    std::function<void(VerificationReport&, const SuiteBounds&)> run;
};

int bounded(const std::optional<int>& v, int def, int lo, int hi, const char* what) {
    int x = v.value_or(def);
    if (x < lo || x > hi)
        throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
    return x;
}

std::string nm(long n, long i) { return "n=" + std::to_string(n) + " i=" + std::to_string(i); }

void closed_vs_recursion(VerificationReport& rep, const SuiteBounds& b) {
    const int n_max = bounded(b.n_max, 25, 2, 60, "--n-max");
    const KLTable table(n_max);
    for (long n = 2; n <= n_max; ++n)
        for (long i = 0; i <= n; ++i) {
            BigInt want = c_closed(n, i), got = c_recursion(n, i, table);
            rep.record(nm(n, i), want.get_str(), got.get_str(), want == got);
        }
}

void chords(VerificationReport& rep, const SuiteBounds& b) {
    const int m_max = bounded(b.m_max, kDefaultChordCap, 3, kDefaultChordCap, "--m-max");
    for (int m = 3; m <= m_max; ++m)
        for (int k = 0; k <= m - 2; ++k) {
            BigInt want = d_cayley(m, k), got = d_bruteforce(m, k);
            rep.record("d m=" + std::to_string(m) + " k=" + std::to_string(k), want.get_str(), got.get_str(),
                       want == got);
        }
    // c_{n,i} = d_{n-i+1,i}
    for (int n = 2; n <= m_max; ++n)
        for (int i = 1; n - i + 1 >= 3; ++i) {
            BigInt want = c_closed(n, i), got = d_bruteforce(n - i + 1, i);
            rep.record("c=d " + nm(n, i), want.get_str(), got.get_str(), want == got);
        }
}

void epw2(VerificationReport& rep, const SuiteBounds& b) {
    const int n_max = bounded(b.n_max, 20, 2, 40, "--n-max");
    rep.add_note("exponent read as t^{n-j-1}; P_k supplied by the closed form and, independently, by the recursion table");
    const KLTable table(n_max);
    const PolySource from_table = [&](long k) {
        std::vector<Rational> v;
        for (const auto& c : table.row(k)) v.emplace_back(c);
        return UniPoly(std::move(v));
    };
    for (long n = 2; n <= n_max; ++n) {
        auto closed = check_epw2(n);
        rep.record("closed n=" + std::to_string(n), "0", closed.residual.to_string(), closed.holds);
        auto rec = check_epw2(n, from_table);
        rep.record("recursion n=" + std::to_string(n), "0", rec.residual.to_string(), rec.holds);
    }
}

std::string series_summary(const USeries& s) {
    if (s.is_zero()) return "0";
    for (int k = 0; k < s.order(); ++k)
        if (!s[k].is_zero()) return "[u^" + std::to_string(k) + "] " + s[k].to_string() + " ...";
    return "0";
}

void functional_eq(VerificationReport& rep, const SuiteBounds& b) {
    const int order = bounded(b.order, kDefaultSeriesOrder, 2, 24, "--order");
    const USeries phi = phi_from_table(order);
    const USeries g = g_series(order);
    const std::string o = "order=" + std::to_string(order);

    const USeries r1 = functional_equation_residual(phi);
    rep.record("residual(Phi) " + o, "0", series_summary(r1), r1.is_zero());
    const USeries r2 = functional_equation_residual(g);
    rep.record("residual(g) " + o, "0", series_summary(r2), r2.is_zero());
    const USeries diff = g - phi;
    rep.record("g - Phi " + o, "0", series_summary(diff), diff.is_zero());

    const USeries f = beckwith_f(order);
    bool f_ok = true;
    for (int m = 3; m <= order; ++m)
        for (long i = 0; i <= m; ++i) f_ok = f_ok && f.coeff(m - 1, i) == Rational(d_cayley(m, i));
    rep.record("[t^i u^{m-1}] f = d_{m,i} " + o, "true", f_ok ? "true" : "false", f_ok);
}

void logconcave(VerificationReport& rep, const SuiteBounds& b) {
    const int n_max = bounded(b.n_max, 60, 2, 1000, "--n-max");
    for (long n = 2; n <= n_max; ++n) {
        auto lc = check_logconcave(n);
        if (lc.triples.empty()) {
            rep.record("n=" + std::to_string(n), "vacuous", "vacuous", lc.holds);
            continue;
        }
        for (const auto& t : lc.triples)
            rep.record(nm(n, t.i), t.square.get_str() + " > " + t.product.get_str(),
                       "margin " + t.margin.get_str(), t.strict);
    }
}

void main2(VerificationReport& rep, const SuiteBounds& b) {
    const int n_max = bounded(b.n_max, 14, 2, 18, "--n-max");
    IhEngine engine;
    for (int n = 2; n <= n_max; ++n)
        for (int i = 0; 2 * i < n - 1; ++i) {
            auto r = verify_main2(n, i, engine);
            BigInt dim = r.actual.dimension();
            bool ok = r.holds && dim == c_closed(n, i);
            rep.record(nm(n, i), "V" + r.expected.to_string() + " (dim " + c_closed(n, i).get_str() + ")",
                       r.actual.to_string() + " (dim " + dim.get_str() + ")", ok);
        }
}

void lemma_key(VerificationReport& rep, const SuiteBounds& b) {
    const int n_max = bounded(b.n_max, 12, 3, 16, "--n-max");
    for (int n = 3; n <= n_max; ++n)
        for (int i = 0; 2 * i < n - 1; ++i) {
            // Part (i): wedge^i rho_n contains V_[n-2i,2^i] only for i = 0.
            BigInt ext = exterior_rho(n, i).multiplicity(*Partition::two_column_tail(n - 2 * i, i));
            rep.record("wedge " + nm(n, i), i == 0 ? "1" : "0", ext.get_str(), ext == (i == 0 ? 1 : 0));
            for (int p = 1; p < n; ++p)
                for (int q = 0; q <= std::min(i, 2 * i - p); ++q) {
                    auto r = lemma_key_check(n, i, p, q);
                    rep.record(nm(n, i) + " p=" + std::to_string(p) + " q=" + std::to_string(q),
                               std::string(r.expected_nonzero ? "(1, 0)" : "(0, 0)"),
                               "(" + r.mult_mu.get_str() + ", " + r.mult_mu_prime.get_str() + ")", r.matches);
                }
            bool top = top_summands_vanish(n, i);
            rep.record("p=n-1 vanishes " + nm(n, i), "true", top ? "true" : "false", top);
        }
}

const std::map<std::string, SuiteSpec>& registry() {
    static const std::map<std::string, SuiteSpec> r{
        {"closed-vs-recursion", {closed_vs_recursion}},
        {"chords", {chords}},
        {"epw2", {epw2}},
        {"functional-eq", {functional_eq}},
        {"logconcave", {logconcave}},
        {"main2", {main2}},
        {"lemma-key", {lemma_key}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"closed-vs-recursion", "chords", "epw2", "functional-eq",
                                                "logconcave", "main2", "lemma-key"};
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteBounds& bounds) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
    VerificationReport rep(name);
    auto start = std::chrono::steady_clock::now();
    it->second.run(rep, bounds);
    rep.set_wall_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return rep;
}

}  // namespace uniform_kl
