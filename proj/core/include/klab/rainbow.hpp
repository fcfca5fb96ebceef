#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klab/bounds.hpp"
#include "klab/chromatic.hpp"
#include "klab/hypergraph.hpp"
#include "klab/kneser_graph.hpp"

namespace klab {

/// A balanced complete p-partite subhypergraph of a Kneser hypergraph whose
/// parts are each rainbow (pairwise distinct colors). Completeness here is
/// the transversal condition: vertices in different parts map to disjoint
/// base edges. Within one part disjointness is not required.
struct PartiteWitness {
    /// p lists of Kneser vertex ids.
    std::vector<std::vector<int>> parts;
    int r = 0;
};

/// (r mod p) parts of size ceil(r/p) followed by parts of size floor(r/p).
std::vector<int> part_sizes(int r, int p);

/// Colors of each part's vertices under c, in part order.
std::vector<std::vector<int>> witness_colors(const Coloring& c, const PartiteWitness& w);

/// Searches for a witness with r total vertices under the proper coloring c.
/// Backtracking fills parts in size order; candidates are grouped by color
/// class, largest class first, and cross-part disjointness is maintained via
/// per-part unions of base vertices.
std::optional<PartiteWitness> find_rainbow_witness(const KneserStructure& ks, const Coloring& c,
                                                   int r);

/// Checks every witness invariant by direct set arithmetic, sharing no state
/// with the search. On failure, *why names the first broken invariant.
bool validate_witness(const KneserStructure& ks, const Coloring& c, int r,
                      const PartiteWitness& w, std::string* why = nullptr);

struct SweepOptions {
    enum class RMode { defect, alternation };
    RMode r_mode = RMode::defect;
    /// 0 = chi of the Kneser hypergraph plus one.
    int max_t = 0;
    /// Canonical colorings examined exhaustively before switching to
    /// sampling.
    std::int64_t enumeration_cap = 5'000'000;
    /// Sampled proper colorings after the cap is hit.
    int samples = 10'000;
    std::uint64_t seed = 0;
    /// Run for non-prime p anyway; the guarantee is only known for primes,
    /// so such runs are exploratory.
    bool force = false;
    SearchBudget budget;
    std::int64_t kg_edge_cap = kDefaultKgEdgeCap;
    AltConfig alt_config;
    /// Counterexample colorings retained in the report.
    int max_counterexamples = 16;
};

struct SweepReport {
    int p = 0;
    int r = 0;
    /// "cd" or "alt".
    std::string r_mode;
    int max_t = 0;
    int kg_vertices = 0;
    std::int64_t kg_edges = 0;
    /// Chi of the Kneser hypergraph when computed for the default max_t,
    /// else 0.
    int chi = 0;
    bool prime_p = true;
    bool forced = false;
    /// Every coloring in scope was examined (no cap, no timeout).
    bool exhaustive = true;
    bool capped = false;
    bool timed_out = false;
    std::int64_t colorings_checked = 0;
    std::int64_t witnesses_found = 0;
    std::int64_t improper_skipped = 0;
    std::int64_t sampled = 0;
    std::int64_t counterexample_count = 0;
    /// Colorings that defeated both the primary and the plain re-verification
    /// search, capped at max_counterexamples.
    std::vector<Coloring> counterexamples;
    std::uint64_t seed = 0;
};

/// Sets r from the defect (or n minus the alternation number), then streams
/// canonical proper colorings of the p-th Kneser hypergraph and checks that
/// each contains a valid witness. Any failure is re-verified by an
/// independent plain-order search before being reported.
SweepReport sweep_verify(const Hypergraph& h, int p, const SweepOptions& options = {});

} // namespace klab
