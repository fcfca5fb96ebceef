#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "klab/hypergraph.hpp"

namespace klab {

/// Wall-clock budget for exact searches. 0 or negative = unlimited. Searches
/// that hit the budget return explicitly flagged partial results; they never
/// silently truncate.
struct SearchBudget {
    std::int64_t time_limit_ms = 0;

    bool unlimited() const { return time_limit_ms <= 0; }
};

/// First proper coloring with at most t colors found by backtracking
/// (descending-degree vertex order, colors introduced canonically), or
/// nullopt if none exists. A hypergraph with a singleton edge has none.
/// If the budget expires, returns nullopt and sets *timed_out.
std::optional<Coloring> find_t_coloring(const Hypergraph& h, int t, const SearchBudget& budget = {},
                                        bool* timed_out = nullptr);

struct ChromaticResult {
    enum class Status { exact, unbounded, timed_out };

    Status status = Status::exact;
    /// Exact chromatic number when status == exact.
    int value = 0;
    /// Certified lower bound (== value when exact).
    int lower_bound = 0;
    /// Witness-backed upper bound (== value when exact; greedy bound on timeout).
    int upper_bound = 0;
    /// exact: lexicographically least optimal coloring; timed_out: the
    /// coloring behind upper_bound; unbounded: empty.
    std::optional<Coloring> witness;

    bool exact() const { return status == Status::exact; }
};

/// Exact chromatic number by incrementing t from 1. Unbounded iff a singleton
/// edge exists; 0 for the empty hypergraph; 1 for edgeless with n >= 1.
ChromaticResult chromatic_number(const Hypergraph& h, const SearchBudget& budget = {});

/// Streams every proper coloring with colors in 1..t in lexicographic order of
/// the color vector. With canonical=true, streams exactly one representative
/// per orbit of the color-permutation action (first occurrences of colors in
/// increasing order). The visitor returns false to stop the stream; the
/// function returns false iff the visitor stopped it.
bool enumerate_proper_colorings(const Hypergraph& h, int t, bool canonical,
                                const std::function<bool(const Coloring&)>& visit);

/// A proper coloring found by randomized backtracking (seeded vertex and
/// color orders); nullopt if none exists. Deterministic in (h, t, seed).
std::optional<Coloring> random_proper_coloring(const Hypergraph& h, int t, std::uint64_t seed);

/// max over edges e and v in e of the number of distinct colors on the
/// neighborhood closure of e \ {v}. Requires c proper and at least one edge.
int local_value(const Hypergraph& h, const Coloring& c);

struct LocalResult {
    int value = 0;
    Coloring witness;
    /// Colors actually used by the witness.
    int witness_t = 0;
    /// The cap the minimization ran under; the true local chromatic number is
    /// defined over arbitrarily many colors, so results are relative to this.
    int max_t = 0;
    bool timed_out = false;
};

/// Minimum of local_value over proper colorings with at most max_t colors,
/// by branch-and-bound over canonical colorings. Requires a coloring with
/// <= max_t colors to exist. On timeout, value is the best upper bound found.
LocalResult local_chromatic_number(const Hypergraph& h, int max_t, const SearchBudget& budget = {});

/// Default cap used by the CLI: min(n, chi + 2), at least 1.
int default_local_max_t(int n, int chi);

} // namespace klab
