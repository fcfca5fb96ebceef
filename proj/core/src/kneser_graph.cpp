#include "klab/kneser_graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klab {

Hypergraph complete_ksubsets(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("complete_ksubsets requires 1 <= k <= n");
    std::vector<VertexSet> edges;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        VertexSet e(n);
        for (int v : pick) e.add(v);
        edges.push_back(std::move(e));
        // next k-combination of 1..n in lexicographic order
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return Hypergraph(n, std::move(edges));
}

namespace {

// DFS over base-edge indices in ascending order; extends the current q-set
// only with edges disjoint from the running union, so every emitted q-set is
// pairwise disjoint and appears exactly once, in lexicographic order.
struct DisjointSetScan {
    const Hypergraph& base;
    int q;
    std::int64_t cap;
    std::vector<int> chosen;
    VertexSet used;
    std::vector<VertexSet> out;

    DisjointSetScan(const Hypergraph& b, int q_, std::int64_t cap_)
        : base(b), q(q_), cap(cap_), used(b.vertex_count()) {}

    void run(int start) {
        if (static_cast<int>(chosen.size()) == q) {
            if (static_cast<std::int64_t>(out.size()) >= cap)
                throw ResourceLimitError("kneser edge cap " + std::to_string(cap) + " exceeded");
            VertexSet e(base.edge_count());
            for (int idx : chosen) e.add(idx + 1);
            out.push_back(std::move(e));
            return;
        }
        int remaining = q - static_cast<int>(chosen.size());
        for (int i = start; i <= base.edge_count() - remaining; ++i) {
            const VertexSet& cand = base.edge(i);
            if (cand.intersects(used)) continue;
            chosen.push_back(i);
            used |= cand;
            run(i + 1);
            used -= cand; // safe: cand was disjoint from the previous union
            chosen.pop_back();
        }
    }
};

} // namespace

KneserStructure build_kneser(Hypergraph base, int q, std::int64_t edge_cap) {
    if (q < 2) throw std::invalid_argument("build_kneser requires q >= 2");
    DisjointSetScan scan(base, q, edge_cap);
    scan.run(0);
    Hypergraph kg(base.edge_count(), std::move(scan.out));
    return {std::move(base), q, std::move(kg)};
}

bool is_kneser_edge(const KneserStructure& ks, const std::vector<int>& kg_vertex_ids) {
    std::set<int> distinct(kg_vertex_ids.begin(), kg_vertex_ids.end());
    if (static_cast<int>(distinct.size()) != ks.q || distinct.size() != kg_vertex_ids.size())
        return false;
    std::vector<int> ids(distinct.begin(), distinct.end());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (ks.base_edge(ids[i]).intersects(ks.base_edge(ids[j]))) return false;
    return true;
}

} // namespace klab
