#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klab/chromatic.hpp"
#include "klab/hypergraph.hpp"
#include "klab/kneser_graph.hpp"
#include "klab/signed_vector.hpp"
#include "klab/vertex_set.hpp"

namespace klab {

struct DefectResult {
    /// Exact defect, or the best upper bound found on timeout.
    int value = 0;
    /// Y with chi of the subhypergraph induced by the complement <= q and
    /// |Y| = value.
    VertexSet witness;
    /// All sizes below this are exhausted; == value when not timed out.
    int lower_bound = 0;
    bool timed_out = false;
};

/// Minimum number of vertices whose removal leaves a subhypergraph with
/// chromatic number <= q. Sizes are tried ascending, subsets of each size in
/// lexicographic order; candidates that miss a known uncolorable core are
/// pruned. Always well defined: removing everything leaves chi = 0.
DefectResult cd(const Hypergraph& h, int q, const SearchBudget& budget = {});

enum class AltMode { exact, exact_inner, heuristic };

struct AltResult {
    int value = 0;
    /// Position read at step i is permutation[i-1].
    std::vector<int> permutation;
    /// A vector attaining value for permutation; absent when a timeout left
    /// only the trivial bound.
    std::optional<SignedVector> vector;
    AltMode mode = AltMode::exact_inner;
    /// Search incomplete. In the outer modes (exact, heuristic) the value is
    /// still a sound upper bound on the alternation number: the minimum over
    /// permutations whose inner maximum completed, or n when none did. In
    /// exact_inner mode the value is only a lower bound on the inner maximum.
    bool timed_out = false;
    std::uint64_t seed = 0;
    int restarts = 0;
};

struct AltConfig {
    /// Exact inner search over signed vectors refuses n above this.
    int exact_inner_cap = 22;
    /// Exact outer minimization over permutations refuses n above this.
    int exact_outer_cap = 9;
    /// Extra seeded starts for the heuristic outer search.
    int heuristic_restarts = 3;
};

/// Max of alternation_length(X, pi) over signed vectors X whose symbol
/// classes each induce no edge of h. Branch and bound over positions in pi
/// order. The value equals the best support size over vectors whose stripped
/// sequence never repeats a symbol consecutively; zeroing a repeat never
/// hurts, so the search only branches on extending symbols or zero.
AltResult max_alt_fixed_perm(const Hypergraph& h, int q, const std::vector<int>& pi,
                             const AltConfig& config = {}, const SearchBudget& budget = {});

/// The outer minimum over vertex orderings. Exact mode scans all n!
/// permutations (reversals skipped, they preserve every alternation length);
/// heuristic mode hill-climbs with adjacent swaps from the identity plus
/// seeded random restarts, and its value is an upper bound on the true
/// minimum since every permutation's inner maximum is one.
AltResult alt_number(const Hypergraph& h, int q, AltMode mode, std::uint64_t seed = 0,
                     const AltConfig& config = {}, const SearchBudget& budget = {});

/// One theorem's lower bound as assembled into a BoundReport.
struct TheoremBound {
    /// Stable report key, e.g. "kriz".
    std::string name;
    /// "chi" or "chi_local": which exact value the bound constrains.
    std::string target;
    int bound = 0;
    /// False when the theorem's hypothesis fails here (wrong q, non-prime q,
    /// defect too small).
    bool applicable = false;
    /// Inputs computed without timeout, so the bound may be asserted.
    bool available = false;
    std::string note;
};

struct BoundReport {
    int n = 0;
    int q = 0;
    int kg_vertices = 0;
    std::int64_t kg_edges = 0;
    DefectResult defect;
    std::optional<AltResult> alt;
    std::optional<ChromaticResult> chi;
    std::optional<LocalResult> chi_local;
    std::vector<TheoremBound> bounds;
    /// False iff some available bound exceeds a computed exact value, which
    /// can only mean a bug on one side.
    bool consistent = true;
    std::vector<std::string> violations;
};

struct BoundOptions {
    /// Compute chi of the Kneser hypergraph exactly.
    bool exact_chi = false;
    /// Compute the local chromatic number exactly (forces exact_chi for the
    /// default cap).
    bool exact_local = false;
    /// 0 = min(kg vertices, chi + 2).
    int local_max_t = 0;
    enum class AltStrategy { automatic, exact, heuristic, off };
    AltStrategy alt = AltStrategy::automatic;
    AltConfig alt_config;
    std::uint64_t seed = 0;
    SearchBudget budget;
    std::int64_t kg_edge_cap = kDefaultKgEdgeCap;
};

/// Computes the defect and alternation quantities of h, derives every
/// applicable theorem lower bound on chi / local chi of the q-th Kneser
/// hypergraph, optionally computes those exact values, and cross-checks.
BoundReport bound_report(const Hypergraph& h, int q, const BoundOptions& options = {});

/// Ceiling of a/b for a >= 0, b >= 1.
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool is_prime(int p);

} // namespace klab
