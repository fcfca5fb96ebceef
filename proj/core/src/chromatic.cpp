#include "klab/chromatic.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "klab/hypergraph.hpp"

#include "detail/deadline.hpp"

namespace klab {

namespace {

using detail::Deadline;

/// Backtracking search over partial colorings. Properness is maintained as an
/// invariant: when an edge has exactly one unassigned vertex and all assigned
/// ones share a color, that color is forbidden on the last vertex before it is
/// ever tried. A complete assignment reached by the search is therefore proper
/// without a final check.
class ColoringSearch {
public:
    struct Options {
        int t = 1;
        bool canonical = true;
        /// Vertex ids in assignment order; must be a permutation of 1..n.
        std::vector<int> order;
        /// Optional per-vertex branching order over colors 1..t, indexed by
        /// vertex id - 1. Only legal when canonical is false; the canonical
        /// cutoff assumes colors are tried in increasing order.
        std::vector<std::vector<int>> color_order;
    };

    /// after_assign returns false to prune the subtree below the assignment
    /// just made; before_undo must exactly reverse its bookkeeping.
    struct Hooks {
        std::function<bool(int v, int c)> after_assign;
        std::function<void(int v, int c)> before_undo;
    };

    ColoringSearch(const Hypergraph& h, Options opt)
        : h_(h), opt_(std::move(opt)), n_(h.vertex_count()) {
        assert(static_cast<int>(opt_.order.size()) == n_);
        color_.assign(n_, 0);
        forbid_.assign(static_cast<std::size_t>(n_) * (opt_.t + 1), 0);
        const auto& edges = h.edges();
        edge_state_.reserve(edges.size());
        incident_.assign(n_, {});
        for (std::size_t i = 0; i < edges.size(); ++i) {
            EdgeState s;
            s.members = edges[i].elements();
            s.size = static_cast<int>(s.members.size());
            assert(s.size >= 2);
            edge_state_.push_back(std::move(s));
            for (int v : edge_state_.back().members) incident_[v - 1].push_back(static_cast<int>(i));
        }
    }

    enum class Outcome { exhausted, stopped, timed_out };

    /// Visits complete assignments; the visitor returns false to stop.
    Outcome run(const std::function<bool(const std::vector<int>&)>& visit, const Deadline& deadline,
                const Hooks* hooks = nullptr) {
        visit_ = &visit;
        deadline_ = deadline;
        hooks_ = hooks;
        stopped_ = false;
        timed_out_ = false;
        nodes_ = 0;
        descend(0, 0);
        if (timed_out_) return Outcome::timed_out;
        return stopped_ ? Outcome::stopped : Outcome::exhausted;
    }

    const std::vector<int>& colors() const { return color_; }

private:
    struct EdgeState {
        std::vector<int> members;
        int size = 0;
        int assigned = 0;
        /// Shared color of the assigned vertices while mixed is false.
        int mono_color = 0;
        bool mixed = false;
        /// Depth at which mixed flipped true, for undo.
        int mixed_depth = -1;
    };

    int& forbid(int v, int c) { return forbid_[static_cast<std::size_t>(v - 1) * (opt_.t + 1) + c]; }

    /// Applies the assignment v := c and pushes any new single-vertex color
    /// bans onto trail_. Never called with a banned color.
    void apply(int v, int c, int depth) {
        color_[v - 1] = c;
        for (int ei : incident_[v - 1]) {
            EdgeState& s = edge_state_[ei];
            if (!s.mixed) {
                if (s.assigned == 0) {
                    s.mono_color = c;
                } else if (c != s.mono_color) {
                    s.mixed = true;
                    s.mixed_depth = depth;
                }
            }
            ++s.assigned;
            assert(s.assigned < s.size || s.mixed);
            if (!s.mixed && s.assigned == s.size - 1) {
                int last = 0;
                for (int u : s.members)
                    if (color_[u - 1] == 0) last = u;
                assert(last != 0);
                ++forbid(last, s.mono_color);
                trail_.push_back({last, s.mono_color});
            }
        }
    }

    void revert(int v, int depth, std::size_t trail_mark) {
        while (trail_.size() > trail_mark) {
            auto [u, c] = trail_.back();
            trail_.pop_back();
            --forbid(u, c);
        }
        for (int ei : incident_[v - 1]) {
            EdgeState& s = edge_state_[ei];
            --s.assigned;
            if (s.mixed && s.mixed_depth == depth) {
                s.mixed = false;
                s.mixed_depth = -1;
            }
        }
        color_[v - 1] = 0;
    }

    void descend(int depth, int max_used) {
        if (stopped_ || timed_out_) return;
        if (depth == n_) {
            if (!(*visit_)(color_)) stopped_ = true;
            return;
        }
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            timed_out_ = true;
            return;
        }
        const int v = opt_.order[depth];
        const int limit = opt_.canonical ? std::min(opt_.t, max_used + 1) : opt_.t;
        assert(opt_.color_order.empty() || !opt_.canonical);
        for (int rank = 1; rank <= limit; ++rank) {
            const int c = opt_.color_order.empty() ? rank : opt_.color_order[v - 1][rank - 1];
            if (forbid(v, c) != 0) continue;
            const std::size_t mark = trail_.size();
            apply(v, c, depth);
            bool keep = true;
            if (hooks_ != nullptr && hooks_->after_assign) keep = hooks_->after_assign(v, c);
            if (keep) descend(depth + 1, std::max(max_used, c));
            if (hooks_ != nullptr && hooks_->before_undo) hooks_->before_undo(v, c);
            revert(v, depth, mark);
            if (stopped_ || timed_out_) return;
        }
    }

    const Hypergraph& h_;
    Options opt_;
    int n_;
    std::vector<int> color_;
    std::vector<int> forbid_;
    std::vector<EdgeState> edge_state_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::pair<int, int>> trail_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
    Deadline deadline_;
    const Hooks* hooks_ = nullptr;
    bool stopped_ = false;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
};

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    return order;
}

/// Descending degree, ties by ascending id. Degree-first tends to hit the
/// constrained part of the search space early.
std::vector<int> degree_order(const Hypergraph& h) {
    auto order = identity_order(h.vertex_count());
    auto deg = h.degrees();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a - 1] > deg[b - 1]; });
    return order;
}

void require_palette(int t) {
    if (t < 1) throw std::invalid_argument("palette size must be at least 1");
}

ColoringSearch::Options make_options(int t, bool canonical, std::vector<int> order,
                                     std::vector<std::vector<int>> color_order = {}) {
    ColoringSearch::Options opt;
    opt.t = t;
    opt.canonical = canonical;
    opt.order = std::move(order);
    opt.color_order = std::move(color_order);
    return opt;
}

std::optional<Coloring> search_one(const Hypergraph& h, int t, std::vector<int> order,
                                   const Deadline& deadline, bool* timed_out) {
    ColoringSearch search(h, make_options(t, true, std::move(order)));
    std::optional<Coloring> found;
    auto visit = [&](const std::vector<int>& colors) {
        found = Coloring{t, colors};
        return false;
    };
    auto outcome = search.run(visit, deadline);
    if (outcome == ColoringSearch::Outcome::timed_out && timed_out != nullptr) *timed_out = true;
    return found;
}

/// Smallest color on each vertex in id order that keeps every edge
/// non-monochromatic. Only edges whose last vertex is being colored can
/// constrain, so the scan is over incident edges fully contained in 1..v.
Coloring greedy_coloring(const Hypergraph& h) {
    const int n = h.vertex_count();
    std::vector<int> color(n, 0);
    std::vector<std::vector<int>> closing(n);
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
        const auto members = h.edge(i).elements();
        closing[members.back() - 1].push_back(static_cast<int>(i));
    }
    int max_used = 0;
    for (int v = 1; v <= n; ++v) {
        for (int c = 1;; ++c) {
            bool ok = true;
            for (int ei : closing[v - 1]) {
                bool mono = true;
                for (int u : h.edge(ei).elements())
                    if (u != v && color[u - 1] != c) {
                        mono = false;
                        break;
                    }
                if (mono) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v - 1] = c;
                max_used = std::max(max_used, c);
                break;
            }
        }
    }
    return Coloring{std::max(max_used, 1), color};
}

} // namespace

std::optional<Coloring> find_t_coloring(const Hypergraph& h, int t, const SearchBudget& budget,
                                        bool* timed_out) {
    require_palette(t);
    if (timed_out != nullptr) *timed_out = false;
    if (h.has_singleton_edge()) return std::nullopt;
    if (h.vertex_count() == 0) return Coloring{t, {}};
    return search_one(h, t, degree_order(h), Deadline::from(budget), timed_out);
}

ChromaticResult chromatic_number(const Hypergraph& h, const SearchBudget& budget) {
    ChromaticResult result;
    if (h.vertex_count() == 0) {
        result.status = ChromaticResult::Status::exact;
        result.value = result.lower_bound = result.upper_bound = 0;
        result.witness = Coloring{1, {}};
        return result;
    }
    if (h.has_singleton_edge()) {
        result.status = ChromaticResult::Status::unbounded;
        result.value = result.lower_bound = result.upper_bound = 0;
        return result;
    }
    const Deadline deadline = Deadline::from(budget);
    Coloring greedy = greedy_coloring(h);
    assert(is_proper(h, greedy));
    const int ub = *std::max_element(greedy.colors.begin(), greedy.colors.end());
    for (int t = 1; t <= ub; ++t) {
        bool timed_out = false;
        auto found = search_one(h, t, degree_order(h), deadline, &timed_out);
        if (timed_out) {
            result.status = ChromaticResult::Status::timed_out;
            result.lower_bound = t;
            result.upper_bound = ub;
            greedy.t = ub;
            result.witness = std::move(greedy);
            return result;
        }
        if (found.has_value()) {
            result.status = ChromaticResult::Status::exact;
            result.value = result.lower_bound = result.upper_bound = t;
            // Rerun in id order for the lexicographically least witness; the
            // canonical restriction loses nothing because the least coloring
            // in any color-permutation orbit is itself canonical.
            bool rerun_timed_out = false;
            auto lex = search_one(h, t, identity_order(h.vertex_count()), deadline,
                                  &rerun_timed_out);
            result.witness = lex.has_value() ? std::move(lex) : std::move(found);
            result.witness->t = t;
            return result;
        }
    }
    assert(false && "greedy witness bounds the search");
    return result;
}

bool enumerate_proper_colorings(const Hypergraph& h, int t, bool canonical,
                                const std::function<bool(const Coloring&)>& visit) {
    require_palette(t);
    if (h.has_singleton_edge()) return true;
    if (h.vertex_count() == 0) return visit(Coloring{t, {}});
    ColoringSearch search(h, make_options(t, canonical, identity_order(h.vertex_count())));
    auto adapter = [&](const std::vector<int>& colors) { return visit(Coloring{t, colors}); };
    return search.run(adapter, Deadline{}) != ColoringSearch::Outcome::stopped;
}

std::optional<Coloring> random_proper_coloring(const Hypergraph& h, int t, std::uint64_t seed) {
    require_palette(t);
    if (h.has_singleton_edge()) return std::nullopt;
    const int n = h.vertex_count();
    if (n == 0) return Coloring{t, {}};
    std::mt19937_64 rng(seed);
    auto order = identity_order(n);
    std::shuffle(order.begin(), order.end(), rng);
    // Shuffling the branch order per vertex only reorders the search tree, so
    // the search stays exhaustive and the first leaf is a random-ish proper
    // coloring rather than the canonical one.
    std::vector<std::vector<int>> color_order(n, identity_order(t));
    for (auto& perm : color_order) std::shuffle(perm.begin(), perm.end(), rng);
    ColoringSearch search(h, make_options(t, false, std::move(order), std::move(color_order)));
    std::optional<Coloring> found;
    auto visit = [&](const std::vector<int>& colors) {
        found = Coloring{t, colors};
        return false;
    };
    search.run(visit, Deadline{});
    return found;
}

int local_value(const Hypergraph& h, const Coloring& c) {
    if (h.edge_count() == 0) throw std::domain_error("local value needs at least one edge");
    validate_coloring(c, h.vertex_count());
    if (!is_proper(h, c)) throw std::invalid_argument("coloring is not proper");
    int best = 0;
    std::vector<char> seen;
    for (const auto& e : h.edges()) {
        for (int v : e.elements()) {
            VertexSet x = e;
            x.remove(v);
            VertexSet closed = neighborhood_closure(h, x);
            seen.assign(static_cast<std::size_t>(c.t) + 1, 0);
            int distinct = 0;
            for (int u : closed.elements()) {
                int cu = c.colors[u - 1];
                if (seen[cu] == 0) {
                    seen[cu] = 1;
                    ++distinct;
                }
            }
            best = std::max(best, distinct);
        }
    }
    return best;
}

namespace {

/// Shared bookkeeping for the local-chromatic branch and bound: per
/// neighborhood closure, the number of distinct colors among its assigned
/// vertices. A partial coloring already showing incumbent-many colors in some
/// closure cannot beat the incumbent.
struct ClosureCounts {
    std::vector<std::vector<int>> members_of;  // closure index -> vertex ids
    std::vector<std::vector<int>> closures_of; // vertex id - 1 -> closure indices
    std::vector<std::vector<int>> count;       // closure index -> per-color count
    std::vector<int> distinct;

    ClosureCounts(const Hypergraph& h, int max_t) {
        std::vector<VertexSet> unique;
        for (const auto& e : h.edges()) {
            for (int v : e.elements()) {
                VertexSet x = e;
                x.remove(v);
                VertexSet closed = neighborhood_closure(h, x);
                if (std::find(unique.begin(), unique.end(), closed) == unique.end())
                    unique.push_back(std::move(closed));
            }
        }
        closures_of.assign(h.vertex_count(), {});
        for (std::size_t i = 0; i < unique.size(); ++i) {
            members_of.push_back(unique[i].elements());
            for (int v : members_of.back()) closures_of[v - 1].push_back(static_cast<int>(i));
        }
        count.assign(unique.size(), std::vector<int>(max_t + 1, 0));
        distinct.assign(unique.size(), 0);
    }

    /// Worst closure gets at least this many colors in any completion.
    int floor() const {
        int m = 0;
        for (int d : distinct) m = std::max(m, d);
        return m;
    }

    void add(int v, int c) {
        for (int i : closures_of[v - 1])
            if (count[i][c]++ == 0) ++distinct[i];
    }

    void remove(int v, int c) {
        for (int i : closures_of[v - 1])
            if (--count[i][c] == 0) --distinct[i];
    }
};

} // namespace

LocalResult local_chromatic_number(const Hypergraph& h, int max_t, const SearchBudget& budget) {
    if (h.edge_count() == 0) throw std::domain_error("local chromatic number needs at least one edge");
    if (max_t < 1) throw std::invalid_argument("max_t must be at least 1");
    if (h.has_singleton_edge())
        throw std::invalid_argument("hypergraph with a singleton edge has no proper coloring");
    const Deadline deadline = Deadline::from(budget);

    LocalResult result;
    result.max_t = max_t;

    bool seed_timed_out = false;
    auto seed = search_one(h, max_t, degree_order(h), deadline, &seed_timed_out);
    if (!seed.has_value()) {
        if (seed_timed_out) {
            result.timed_out = true;
            return result;
        }
        throw std::invalid_argument("no proper coloring with max_t colors");
    }
    int incumbent = local_value(h, *seed);
    Coloring best = *seed;

    ClosureCounts counts(h, max_t);
    ColoringSearch::Hooks hooks;
    hooks.after_assign = [&](int v, int c) {
        counts.add(v, c);
        return counts.floor() < incumbent;
    };
    hooks.before_undo = [&](int v, int c) { counts.remove(v, c); };

    ColoringSearch search(h, make_options(max_t, true, identity_order(h.vertex_count())));
    auto visit = [&](const std::vector<int>& colors) {
        const int value = counts.floor();
        if (value < incumbent) {
            incumbent = value;
            best = Coloring{max_t, colors};
        }
        // The closure of e \ {v} contains e itself (v re-enters through e),
        // and e is non-monochromatic, so 2 is a hard floor for the value and
        // the search can stop early on reaching it.
        return incumbent > 2;
    };
    auto outcome = search.run(visit, deadline, &hooks);

    result.value = incumbent;
    result.timed_out = outcome == ColoringSearch::Outcome::timed_out;
    result.witness_t = best.used_colors();
    result.witness = std::move(best);
    return result;
}

int default_local_max_t(int n, int chi) {
    return std::max(1, std::min(n, chi + 2));
}

} // namespace klab
