#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "klab/errors.hpp"
#include "klab/hypergraph.hpp"

namespace klab {

struct ParseWarning {
    int line = 0;
    std::string message;
};

/// Parses the .hg text format:
///   line 1:        "n m"
///   next m lines:  space-separated distinct vertex ids in 1..n, one edge per line
/// Lines starting with '#' are comments; blank lines are ignored. Duplicate
/// edges are dropped (first occurrence wins) and reported through `warnings`.
/// Throws ParseError with the offending line number.
Hypergraph parse_hypergraph(std::string_view text, std::vector<ParseWarning>* warnings = nullptr);

/// Canonical .hg serialization: header then one edge per line, ids ascending.
std::string format_hypergraph(const Hypergraph& h);

} // namespace klab
