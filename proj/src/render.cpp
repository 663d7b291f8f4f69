#include "uniform_kl/render.hpp"

#include "uniform_kl/kl_numbers.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace uniform_kl {

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format: " + s);
}

namespace {

std::vector<BigInt> closed_row(long n) {
    std::vector<BigInt> row;
    for (long i = 0; !kl_vanishes(n, i); ++i) row.push_back(c_closed(n, i));
    return row;
}

nlohmann::ordered_json row_json(long n, const std::vector<BigInt>& row) {
    nlohmann::ordered_json j;
    j["n"] = n;
    auto& coeffs = j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : row) coeffs.push_back(c.get_str());
    return j;
}

}  // namespace

std::string render_table(long n_max, OutputFormat fmt) {
    if (n_max < 2) throw std::invalid_argument("--n-max must be at least 2");
    std::ostringstream os;
    if (fmt == OutputFormat::json) {
        auto doc = nlohmann::ordered_json::array();
        for (long n = 2; n <= n_max; ++n) doc.push_back(row_json(n, closed_row(n)));
        os << doc.dump() << "\n";
        return os.str();
    }
    for (long n = 2; n <= n_max; ++n) {
        auto row = closed_row(n);
        if (fmt == OutputFormat::text) {
            os << "n=" << n << ":";
            for (const auto& c : row) os << " " << c;
        } else {
            os << n;
            for (const auto& c : row) os << "," << c;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_poly(long n, OutputFormat fmt) {
    if (n < 2) throw std::invalid_argument("--n must be at least 2");
    switch (fmt) {
    case OutputFormat::json:
        return row_json(n, closed_row(n)).dump() + "\n";
    case OutputFormat::csv: {
        std::ostringstream os;
        os << n;
        for (const auto& c : closed_row(n)) os << "," << c;
        return os.str() + "\n";
    }
    case OutputFormat::text:
        break;
    }
    return kl_poly(n).to_string() + "\n";
}

std::string render_rep(int n, int i, const VirtualRep& rep, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["i"] = i;
        auto& terms = j["terms"] = nlohmann::ordered_json::array();
        for (auto it = rep.terms().rbegin(); it != rep.terms().rend(); ++it)
            terms.push_back({{"partition", it->first.parts()}, {"mult", it->second.get_str()}});
        j["dimension"] = rep.dimension().get_str();
        return j.dump() + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::ostringstream os;
        for (auto it = rep.terms().rbegin(); it != rep.terms().rend(); ++it)
            os << '"' << it->first.to_string() << "\"," << it->second << "\n";
        return os.str();
    }
    if (rep.is_zero()) return "0\n";
    return rep.to_string() + " (dim " + rep.dimension().get_str() + ")\n";
}

}  // namespace uniform_kl
