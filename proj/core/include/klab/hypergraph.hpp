#pragma once

#include <optional>
#include <vector>

#include "klab/vertex_set.hpp"

namespace klab {

/// Total assignment of colors 1..t to vertices 1..n. colors[v-1] is the color
/// of vertex v.
struct Coloring {
    int t = 1;
    std::vector<int> colors;

    int color_of(int v) const { return colors[static_cast<std::size_t>(v - 1)]; }

    /// Number of distinct colors actually used.
    int used_colors() const;

    bool operator==(const Coloring&) const = default;
};

/// Checks 1 <= colors[i] <= t for all entries and colors.size() == n;
/// throws std::invalid_argument otherwise.
void validate_coloring(const Coloring& c, int n);

/// Finite hypergraph on vertices 1..n with an ordered family of distinct
/// nonempty edges. Duplicate edges passed to the constructor are dropped,
/// keeping first-occurrence order. Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws std::invalid_argument on an empty edge or a capacity mismatch.
    Hypergraph(int n, std::vector<VertexSet> edges);

    /// Convenience constructor from explicit vertex lists; validates ids.
    static Hypergraph from_edge_lists(int n, const std::vector<std::vector<int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    bool has_singleton_edge() const;

    /// degrees()[v-1] = number of edges containing v.
    std::vector<int> degrees() const;

    /// incidence()[v-1] = indices of edges containing v, ascending.
    std::vector<std::vector<int>> incidence() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// True iff no edge is monochromatic under c. An edge of size one is always
/// monochromatic. Throws std::invalid_argument if c does not cover 1..n.
bool is_proper(const Hypergraph& h, const Coloring& c);

struct InducedSubhypergraph {
    Hypergraph hypergraph;
    /// original_ids[v-1] = id in the parent hypergraph of the new vertex v.
    std::vector<int> original_ids;
};

/// Subhypergraph on the kept vertices, re-indexed 1..|keep| in ascending
/// original-id order; keeps exactly the edges contained in `keep`.
InducedSubhypergraph induced(const Hypergraph& h, const VertexSet& keep);

/// X together with every vertex that is the sole vertex of some edge outside X.
VertexSet neighborhood_closure(const Hypergraph& h, const VertexSet& x);

} // namespace klab
