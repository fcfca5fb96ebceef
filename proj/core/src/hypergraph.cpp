#include "klab/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace klab {

int Coloring::used_colors() const {
    std::set<int> distinct(colors.begin(), colors.end());
    return static_cast<int>(distinct.size());
}

void validate_coloring(const Coloring& c, int n) {
    if (static_cast<int>(c.colors.size()) != n)
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " vertices, hypergraph has " + std::to_string(n));
    if (c.t < 1) throw std::invalid_argument("coloring must have t >= 1");
    for (int col : c.colors)
        if (col < 1 || col > c.t)
            throw std::invalid_argument("color " + std::to_string(col) + " outside 1.." +
                                        std::to_string(c.t));
}

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    edges_.reserve(edges.size());
    std::unordered_set<VertexSet, VertexSet::Hash> seen;
    for (auto& e : edges) {
        if (e.capacity() != n) throw std::invalid_argument("edge capacity does not match vertex count");
        if (e.empty()) throw std::invalid_argument("empty edge");
        if (seen.insert(e).second) edges_.push_back(std::move(e));
    }
}

Hypergraph Hypergraph::from_edge_lists(int n, const std::vector<std::vector<int>>& edges) {
    std::vector<VertexSet> sets;
    sets.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet s(n);
        for (int v : e) {
            if (v < 1 || v > n)
                throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range 1.." +
                                            std::to_string(n));
            s.add(v);
        }
        sets.push_back(std::move(s));
    }
    return Hypergraph(n, std::move(sets));
}

bool Hypergraph::has_singleton_edge() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const VertexSet& e) { return e.size() == 1; });
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_)
        for (int v : e.elements()) ++deg[static_cast<std::size_t>(v - 1)];
    return deg;
}

std::vector<std::vector<int>> Hypergraph::incidence() const {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_));
    for (int i = 0; i < edge_count(); ++i)
        for (int v : edges_[static_cast<std::size_t>(i)].elements())
            inc[static_cast<std::size_t>(v - 1)].push_back(i);
    return inc;
}

bool is_proper(const Hypergraph& h, const Coloring& c) {
    validate_coloring(c, h.vertex_count());
    for (const auto& e : h.edges()) {
        auto vs = e.elements();
        int first = c.color_of(vs[0]);
        bool mono = true;
        for (std::size_t i = 1; i < vs.size(); ++i) {
            if (c.color_of(vs[i]) != first) {
                mono = false;
                break;
            }
        }
        if (mono) return false;
    }
    return true;
}

InducedSubhypergraph induced(const Hypergraph& h, const VertexSet& keep) {
    std::vector<int> original = keep.elements();
    std::vector<int> new_id(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < original.size(); ++i)
        new_id[static_cast<std::size_t>(original[i])] = static_cast<int>(i) + 1;

    int m = static_cast<int>(original.size());
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        if (!e.subset_of(keep)) continue;
        VertexSet remapped(m);
        for (int v : e.elements()) remapped.add(new_id[static_cast<std::size_t>(v)]);
        edges.push_back(std::move(remapped));
    }
    return {Hypergraph(m, std::move(edges)), std::move(original)};
}

VertexSet neighborhood_closure(const Hypergraph& h, const VertexSet& x) {
    VertexSet out = x;
    for (const auto& e : h.edges()) {
        VertexSet diff = e - x;
        if (diff.size() == 1) out.add(diff.first());
    }
    return out;
}

} // namespace klab
