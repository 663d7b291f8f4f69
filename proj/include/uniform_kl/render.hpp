#pragma once

#include "uniform_kl/symreps.hpp"

#include <string>

namespace uniform_kl {

enum class OutputFormat { text, json, csv };

/// Parses "text", "json" or "csv"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& s);

/// Table of c_{n,i} for 2 <= n <= n_max. Throws std::invalid_argument for n_max < 2.
std::string render_table(long n_max, OutputFormat fmt);
std::string render_poly(long n, OutputFormat fmt);
std::string render_rep(int n, int i, const VirtualRep& rep, OutputFormat fmt);

}  // namespace uniform_kl
