#pragma once

#include <cstdint>
#include <vector>

#include "klab/errors.hpp"
#include "klab/hypergraph.hpp"

namespace klab {

inline constexpr std::int64_t kDefaultKgEdgeCap = 10'000'000;

/// A Kneser hypergraph together with the base it was built from. Vertex i of
/// `kg` (1-based) corresponds to edge i of `base`, in base input order. Edges
/// of `kg` are exactly the q-sets of base edges that are pairwise disjoint.
struct KneserStructure {
    Hypergraph base;
    int q = 2;
    Hypergraph kg;

    /// Base edge behind kg vertex `kg_vertex` (1-based).
    const VertexSet& base_edge(int kg_vertex) const {
        return base.edge(kg_vertex - 1);
    }
};

/// The hypergraph ([n], all k-subsets), edges in lexicographic order.
/// Requires 1 <= k <= n.
Hypergraph complete_ksubsets(int n, int k);

/// Materializes KG^q(base). Requires q >= 2 and no empty base edge (the type
/// already excludes empty edges). Throws ResourceLimitError once the kg edge
/// count passes `edge_cap`.
KneserStructure build_kneser(Hypergraph base, int q, std::int64_t edge_cap = kDefaultKgEdgeCap);

/// True iff `kg_vertex_ids` has exactly q distinct ids whose base edges are
/// pairwise disjoint.
bool is_kneser_edge(const KneserStructure& ks, const std::vector<int>& kg_vertex_ids);

} // namespace klab
