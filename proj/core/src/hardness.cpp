#include "klab/hardness.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "detail/deadline.hpp"

namespace klab {

namespace {

using detail::Deadline;

void require_graph(const Hypergraph& g) {
    for (const auto& e : g.edges())
        if (e.size() != 2) throw std::invalid_argument("input must be 2-uniform");
}

/// Greedy clique cover: vertices in id order join the first clique they are
/// adjacent to entirely. An independent set meets each clique at most once,
/// so the clique count bounds the independence number from above.
int clique_cover_bound(const std::vector<VertexSet>& adj, const VertexSet& alive) {
    std::vector<VertexSet> cliques;
    for (int v : alive.elements()) {
        bool placed = false;
        for (auto& clique : cliques) {
            if (clique.subset_of(adj[v - 1])) {
                clique.add(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            VertexSet fresh(static_cast<int>(adj.size()));
            fresh.add(v);
            cliques.push_back(std::move(fresh));
        }
    }
    return static_cast<int>(cliques.size());
}

struct MisSearcher {
    const std::vector<VertexSet>& adj;
    Deadline deadline;
    int best = -1;
    VertexSet best_set;
    VertexSet current;
    bool timed_out = false;
    std::uint64_t nodes = 0;

    MisSearcher(const std::vector<VertexSet>& a, const Deadline& d, int n)
        : adj(a), deadline(d), best_set(n), current(n) {}

    void dfs(VertexSet alive) {
        if (timed_out) return;
        if ((++nodes & 255) == 0 && deadline.expired()) {
            timed_out = true;
            return;
        }
        if (alive.empty()) {
            if (current.size() > best) {
                best = current.size();
                best_set = current;
            }
            return;
        }
        if (current.size() + clique_cover_bound(adj, alive) <= best) return;
        int pick = 0;
        int pick_deg = -1;
        for (int v : alive.elements()) {
            const int d = (adj[v - 1] & alive).size();
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        // Take pick: drop its closed neighborhood. Skip pick: drop it alone.
        VertexSet taken = alive;
        taken -= adj[pick - 1];
        taken.remove(pick);
        current.add(pick);
        dfs(taken);
        current.remove(pick);
        if (timed_out) return;
        alive.remove(pick);
        dfs(alive);
    }
};

} // namespace

JoinInstance join_construction(const Hypergraph& g, const std::vector<int>& rho_in) {
    require_graph(g);
    const int n = g.vertex_count();
    std::vector<int> rho = rho_in;
    if (rho.empty()) {
        rho.resize(n);
        for (int v = 1; v <= n; ++v) rho[v - 1] = v;
    }
    if (static_cast<int>(rho.size()) != n)
        throw std::invalid_argument("rho length does not match vertex count");
    std::vector<char> seen(n + 1, 0);
    for (int r : rho) {
        if (r < 1 || r > n) throw std::invalid_argument("rho entry out of range");
        if (seen[r] != 0) throw std::invalid_argument("rho repeats an entry");
        seen[r] = 1;
    }

    const auto original = [&](int v) { return 2 * rho[v - 1] - 1; };
    const auto copy = [&](int v) { return 2 * rho[v - 1]; };

    std::vector<std::vector<int>> edges;
    for (const auto& e : g.edges()) {
        const auto ends = e.elements();
        edges.push_back({original(ends[0]), original(ends[1])});
    }
    for (const auto& e : g.edges()) {
        const auto ends = e.elements();
        edges.push_back({copy(ends[0]), copy(ends[1])});
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) edges.push_back({original(a), copy(b)});

    JoinInstance out;
    out.source = g;
    out.joined = Hypergraph::from_edge_lists(2 * n, edges);
    out.rho = std::move(rho);
    return out;
}

IndependenceResult independence_number(const Hypergraph& g, const SearchBudget& budget) {
    require_graph(g);
    const int n = g.vertex_count();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& e : g.edges()) {
        const auto ends = e.elements();
        adj[ends[0] - 1].add(ends[1]);
        adj[ends[1] - 1].add(ends[0]);
    }
    MisSearcher search(adj, Deadline::from(budget), n);
    search.dfs(VertexSet::full(n));
    IndependenceResult out;
    out.value = std::max(search.best, 0);
    out.witness = search.best_set;
    out.lower_bound = out.value;
    out.timed_out = search.timed_out;
    return out;
}

ReductionVerdict verify_reduction(const Hypergraph& g, const AltConfig& config,
                                  const SearchBudget& budget) {
    require_graph(g);
    const Deadline deadline = Deadline::from(budget);
    JoinInstance join = join_construction(g);

    ReductionVerdict verdict;
    verdict.joined_vertices = join.joined.vertex_count();

    auto alpha = independence_number(g, deadline.remaining());
    verdict.alpha = alpha.value;
    verdict.independent_witness = alpha.witness;
    verdict.timed_out = alpha.timed_out;

    auto alt = max_alt_fixed_perm(join.joined, 2,
                                  identity_permutation(join.joined.vertex_count()), config,
                                  deadline.remaining());
    verdict.max_alt_id = alt.value;
    verdict.alt_witness = alt.vector;
    verdict.timed_out = verdict.timed_out || alt.timed_out;

    verdict.equal = !verdict.timed_out && verdict.max_alt_id == 2 * verdict.alpha;
    return verdict;
}

} // namespace klab
