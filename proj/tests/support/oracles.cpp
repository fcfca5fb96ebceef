#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace klab::testing {

namespace {

/// Calls visit(combo) for every size-r index combination of 0..count-1 in
/// lexicographic order; visit returns false to stop. Returns false iff
/// stopped.
template <typename Visit>
bool for_each_combination(int count, int r, Visit visit) {
    if (r > count) return true;
    std::vector<int> combo(r);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
        if (!visit(combo)) return false;
        int i = r - 1;
        while (i >= 0 && combo[i] == count - r + i) --i;
        if (i < 0) return true;
        ++combo[i];
        for (int j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
    }
}

bool proper_assignment(const Hypergraph& h, const std::vector<int>& colors) {
    for (const auto& e : h.edges()) {
        const auto ids = e.elements();
        bool mono = true;
        for (std::size_t i = 1; i < ids.size(); ++i)
            if (colors[ids[i] - 1] != colors[ids[0] - 1]) {
                mono = false;
                break;
            }
        if (mono) return false;
    }
    return true;
}

/// Odometer over colors 1..t; visit returns false to stop early.
template <typename Visit>
void for_each_assignment(int n, int t, Visit visit) {
    std::vector<int> colors(n, 1);
    while (true) {
        if (!visit(colors)) return;
        int i = 0;
        while (i < n && colors[i] == t) colors[i++] = 1;
        if (i == n) return;
        ++colors[i];
    }
}

} // namespace

bool oracle_t_colorable(const Hypergraph& h, int t) {
    const int n = h.vertex_count();
    if (n == 0) return true;
    if (t < 1) return h.edge_count() == 0;
    bool found = false;
    for_each_assignment(n, t, [&](const std::vector<int>& colors) {
        if (proper_assignment(h, colors)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

int oracle_chromatic(const Hypergraph& h) {
    assert(h.vertex_count() <= 10);
    if (h.vertex_count() == 0) return 0;
    if (h.has_singleton_edge()) return -1;
    for (int t = 1; t <= h.vertex_count(); ++t)
        if (oracle_t_colorable(h, t)) return t;
    return -1;
}

namespace {

Hypergraph plain_induced(const Hypergraph& h, const VertexSet& keep) {
    std::vector<int> new_id(h.vertex_count() + 1, 0);
    int next = 0;
    for (int v = 1; v <= h.vertex_count(); ++v)
        if (keep.contains(v)) new_id[v] = ++next;
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges()) {
        if (!e.subset_of(keep)) continue;
        std::vector<int> mapped;
        for (int v : e.elements()) mapped.push_back(new_id[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph::from_edge_lists(next, edges);
}

} // namespace

int oracle_cd(const Hypergraph& h, int q) {
    const int n = h.vertex_count();
    assert(n <= 10);
    for (int s = 0; s <= n; ++s) {
        bool found = false;
        for_each_combination(n, s, [&](const std::vector<int>& combo) {
            VertexSet keep = VertexSet::full(n);
            for (int i : combo) keep.remove(i + 1);
            if (oracle_t_colorable(plain_induced(h, keep), q)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return s;
    }
    return n;
}

Hypergraph oracle_kneser(const Hypergraph& base, int q) {
    const int m = base.edge_count();
    std::vector<VertexSet> kg_edges;
    for_each_combination(m, q, [&](const std::vector<int>& combo) {
        for (std::size_t i = 0; i < combo.size(); ++i)
            for (std::size_t j = i + 1; j < combo.size(); ++j)
                if (base.edge(combo[i]).intersects(base.edge(combo[j]))) return true;
        std::vector<int> ids;
        for (int i : combo) ids.push_back(i + 1);
        kg_edges.push_back(VertexSet::of(m, ids));
        return true;
    });
    return Hypergraph(m, std::move(kg_edges));
}

int oracle_longest_alternating(const std::vector<int>& sequence, int q) {
    std::vector<int> best(q + 1, 0); // best[s] = longest ending in symbol s
    for (int x : sequence) {
        if (x == 0) continue;
        int prev = 0;
        for (int s = 1; s <= q; ++s)
            if (s != x) prev = std::max(prev, best[s]);
        best[x] = std::max(best[x], prev + 1);
    }
    return *std::max_element(best.begin(), best.end());
}

int oracle_max_alt(const Hypergraph& h, int q, const std::vector<int>& pi) {
    const int n = h.vertex_count();
    assert(n <= 12);
    assert(static_cast<int>(pi.size()) == n);
    int best = 0;
    std::vector<int> entries(n, 0);
    // Odometer over (q+1)^n entry vectors, symbol 0 included.
    while (true) {
        bool valid = true;
        for (int s = 1; s <= q && valid; ++s) {
            std::vector<int> members;
            for (int v = 1; v <= n; ++v)
                if (entries[v - 1] == s) members.push_back(v);
            const VertexSet cls = VertexSet::of(n, members);
            for (const auto& e : h.edges())
                if (e.subset_of(cls)) {
                    valid = false;
                    break;
                }
        }
        if (valid) {
            std::vector<int> seq;
            for (int i = 0; i < n; ++i) seq.push_back(entries[pi[i] - 1]);
            best = std::max(best, oracle_longest_alternating(seq, q));
        }
        int i = 0;
        while (i < n && entries[i] == q) entries[i++] = 0;
        if (i == n) break;
        ++entries[i];
    }
    return best;
}

int oracle_alt_number(const Hypergraph& h, int q) {
    const int n = h.vertex_count();
    assert(n <= 7);
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    int best = oracle_max_alt(h, q, pi);
    while (std::next_permutation(pi.begin(), pi.end()))
        best = std::min(best, oracle_max_alt(h, q, pi));
    return best;
}

int oracle_local_value(const Hypergraph& h, const Coloring& c) {
    if (h.edge_count() == 0) throw std::domain_error("no edges");
    const int n = h.vertex_count();
    int best = 0;
    for (const auto& e : h.edges()) {
        for (int v : e.elements()) {
            VertexSet x = e;
            x.remove(v);
            VertexSet closure = x;
            for (const auto& f : h.edges()) {
                VertexSet diff = f;
                diff -= x;
                if (diff.size() == 1) closure.add(diff.first());
            }
            std::vector<bool> seen(static_cast<std::size_t>(c.t) + 1, false);
            int distinct = 0;
            for (int w : closure.elements())
                if (!seen[c.color_of(w)]) {
                    seen[c.color_of(w)] = true;
                    ++distinct;
                }
            best = std::max(best, distinct);
        }
    }
    (void)n;
    return best;
}

int oracle_local_chromatic(const Hypergraph& h, int max_t) {
    const int n = h.vertex_count();
    int best = -1;
    for_each_assignment(n, max_t, [&](const std::vector<int>& colors) {
        if (proper_assignment(h, colors)) {
            const Coloring c{max_t, colors};
            const int value = oracle_local_value(h, c);
            if (best < 0 || value < best) best = value;
        }
        return true;
    });
    return best;
}

int oracle_independence(const Hypergraph& g) {
    const int n = g.vertex_count();
    assert(n <= 20);
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        const auto ids = e.elements();
        assert(ids.size() == 2);
        adj[ids[0] - 1] |= 1u << (ids[1] - 1);
        adj[ids[1] - 1] |= 1u << (ids[0] - 1);
    }
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (int v = 0; v < n && independent; ++v)
            if ((mask >> v) & 1u)
                if (adj[v] & mask) independent = false;
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int max_edges) {
    std::uniform_int_distribution<int> edge_count(1, max_edges);
    std::uniform_int_distribution<int> size_pick(0, 9);
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<VertexSet> edges;
    const int target = edge_count(rng);
    int attempts = 0;
    while (static_cast<int>(edges.size()) < target && attempts < 20 * target) {
        ++attempts;
        const int roll = size_pick(rng);
        const int size = std::min(n, roll == 0 ? 1 : (roll <= 5 ? 2 : 3));
        std::shuffle(pool.begin(), pool.end(), rng);
        VertexSet e = VertexSet::of(n, std::vector<int>(pool.begin(), pool.begin() + size));
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<std::vector<int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (flip(rng)) edges.push_back({u, v});
    return Hypergraph::from_edge_lists(n, edges);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

} // namespace klab::testing
