#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uniform_kl {

struct CaseRecord {
    std::string inputs;
    std::string expected;
    std::string actual;
    bool pass = false;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    void record(std::string inputs, std::string expected, std::string actual, bool pass);
    void set_wall_seconds(double s) { wall_seconds_ = s; }
    void add_note(std::string note) { notes_.push_back(std::move(note)); }

    const std::string& suite() const { return suite_; }
    const std::vector<CaseRecord>& cases() const { return cases_; }
    size_t passed() const { return passed_; }
    size_t failed() const { return cases_.size() - passed_; }
    bool all_passed() const { return failed() == 0; }
    double wall_seconds() const { return wall_seconds_; }
    int exit_code() const { return all_passed() ? 0 : 1; }

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;

private:
    std::string suite_;
    std::vector<CaseRecord> cases_;
    std::vector<std::string> notes_;
    size_t passed_ = 0;
    double wall_seconds_ = 0.0;
};

/// Optional bounds; suites fall back to their defaults.
struct SuiteBounds {
    std::optional<int> n_max;
    std::optional<int> m_max;
    std::optional<int> order;
};

/// Suite names accepted by run_suite, in `verify all` order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name or
/// bounds outside the suite's caps.
VerificationReport run_suite(const std::string& name, const SuiteBounds& bounds = {});

}  // namespace uniform_kl
