#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "klab/bounds.hpp"
#include "klab/chromatic.hpp"
#include "klab/hypergraph.hpp"
#include "klab/signed_vector.hpp"
#include "klab/vertex_set.hpp"

namespace klab {

/// A graph joined with a copy of itself: every original vertex is adjacent to
/// every copy vertex. Original v gets id 2*rho(v)-1, its copy 2*rho(v), so
/// originals sit on odd ids and copies on even ids.
struct JoinInstance {
    Hypergraph source;
    Hypergraph joined;
    /// rho[v-1] is the rank of source vertex v.
    std::vector<int> rho;
};

/// Builds the join with rho = input order by default. Edge order: source
/// edges, mirrored copy edges, then all cross pairs in row-major vertex
/// order. Requires a 2-uniform source.
JoinInstance join_construction(const Hypergraph& g,
                               const std::vector<int>& rho = std::vector<int>());

struct IndependenceResult {
    int value = 0;
    VertexSet witness;
    /// Certified; == value when not timed out.
    int lower_bound = 0;
    bool timed_out = false;
};

/// Exact maximum independent set by branch and bound: branch on a maximum
/// degree vertex, bound by a greedy clique cover of the remainder.
IndependenceResult independence_number(const Hypergraph& g, const SearchBudget& budget = {});

struct ReductionVerdict {
    bool equal = false;
    int alpha = 0;
    int max_alt_id = 0;
    VertexSet independent_witness;
    std::optional<SignedVector> alt_witness;
    /// Join vertex count, 2n.
    int joined_vertices = 0;
    bool timed_out = false;
};

/// Checks on one graph that the maximum identity-order alternation over the
/// join equals twice the independence number, which is the equality that
/// carries NP-hardness over to the alternation quantity.
ReductionVerdict verify_reduction(const Hypergraph& g, const AltConfig& config = {},
                                  const SearchBudget& budget = {});

} // namespace klab
