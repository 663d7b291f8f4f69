#include "uniform_kl/render.hpp"
#include "uniform_kl/symreps.hpp"
#include "uniform_kl/verify.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    using namespace uniform_kl;

    CLI::App app{"Kazhdan-Lusztig polynomials of the uniform matroids U_{n-1,n}"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"text", "json", "csv"};

    long table_n_max = 0;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Print the coefficients c_{n,i} for 2 <= n <= N");
    table->add_option("--n-max", table_n_max, "Largest n")->required();
    table->add_option("--format", table_format)->check(CLI::IsMember(formats));

    long poly_n = 0;
    std::string poly_format = "text";
    auto* poly = app.add_subcommand("poly", "Print the polynomial P_n(t)");
    poly->add_option("--n", poly_n)->required();
    poly->add_option("--format", poly_format)->check(CLI::IsMember(formats));

    int reps_n = 0, reps_i = 0;
    std::string reps_format = "text";
    auto* reps = app.add_subcommand("reps", "Print IH^{2i}(X_n) as a virtual S_n representation");
    reps->add_option("--n", reps_n)->required()->check(CLI::Range(2, 40));
    reps->add_option("--i", reps_i)->required()->check(CLI::NonNegativeNumber);
    reps->add_option("--format", reps_format)->check(CLI::IsMember(formats));

    std::string suite;
    SuiteBounds bounds;
    std::string verify_format = "text";
    std::vector<std::string> suites = suite_names();
    suites.emplace_back("all");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suites));
    verify->add_option("--n-max", bounds.n_max);
    verify->add_option("--m-max", bounds.m_max);
    verify->add_option("--order", bounds.order);
    verify->add_option("--format", verify_format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table) {
            std::cout << render_table(table_n_max, parse_format(table_format));
        } else if (*poly) {
            std::cout << render_poly(poly_n, parse_format(poly_format));
        } else if (*reps) {
            std::cout << render_rep(reps_n, reps_i, ih_rep(reps_n, reps_i), parse_format(reps_format));
        } else if (*verify) {
            std::vector<std::string> to_run = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            if (suite == "all" && (bounds.n_max || bounds.m_max || bounds.order)) {
                std::cerr << "verify all runs every suite at its default bounds\n";
                return kExitUsage;
            }
            int code = 0;
            auto docs = nlohmann::ordered_json::array();
            for (const auto& name : to_run) {
                VerificationReport r = run_suite(name, bounds);
                if (verify_format == "json")
                    docs.push_back(r.to_json());
                else
                    std::cout << r.to_text();
                std::cerr << name << ": " << (r.all_passed() ? "pass" : "FAIL") << "\n";
                if (!r.all_passed()) code = 1;
            }
            if (verify_format == "json") std::cout << (suite == "all" ? docs : docs[0]).dump() << "\n";
            return code;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
