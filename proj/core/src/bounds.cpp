#include "klab/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <random>
#include <stdexcept>
#include <utility>

#include "klab/errors.hpp"

#include "detail/deadline.hpp"

namespace klab {

namespace {

using detail::Deadline;

void require_q(int q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
}

void require_permutation(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("permutation length does not match vertex count");
    std::vector<char> seen(n + 1, 0);
    for (int v : pi) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range");
        if (seen[v] != 0) throw std::invalid_argument("permutation repeats an entry");
        seen[v] = 1;
    }
}

bool q_colorable(const Hypergraph& h, const VertexSet& keep, int q, const Deadline& deadline,
                 bool* timed_out) {
    auto sub = induced(h, keep);
    bool to = false;
    auto coloring = find_t_coloring(sub.hypergraph, q, deadline.remaining(), &to);
    if (to && timed_out != nullptr) *timed_out = true;
    return coloring.has_value();
}

/// Shrinks a set whose induced subhypergraph needs more than q colors while
/// keeping that property, by trying single deletions in id order. Smaller
/// cores make the intersection prune bite harder.
VertexSet minimize_core(const Hypergraph& h, VertexSet core, int q, const Deadline& deadline) {
    for (int v : core.elements()) {
        if (deadline.expired()) break;
        VertexSet trial = core;
        trial.remove(v);
        bool to = false;
        if (!q_colorable(h, trial, q, deadline, &to) && !to) core = std::move(trial);
    }
    return core;
}

/// Visits all s-subsets of 1..n as VertexSets in lexicographic id order.
/// The visitor returns false to stop.
template <typename Visit>
void for_each_subset(int n, int s, Visit&& visit) {
    assert(s >= 0 && s <= n);
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i + 1;
    while (true) {
        VertexSet y(n);
        for (int v : idx) y.add(v);
        if (!visit(static_cast<const VertexSet&>(y))) return;
        int i = s - 1;
        while (i >= 0 && idx[i] == n - (s - 1 - i)) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

DefectResult cd(const Hypergraph& h, int q, const SearchBudget& budget) {
    require_q(q);
    const int n = h.vertex_count();
    const Deadline deadline = Deadline::from(budget);

    // Greedy phase: delete the vertex on the most surviving edges until q
    // colors suffice. The result caps the exact scan and stands in for it on
    // timeout.
    VertexSet keep = VertexSet::full(n);
    VertexSet removed(n);
    while (true) {
        bool to = false;
        if (q_colorable(h, keep, q, deadline, &to)) break;
        if (to) {
            DefectResult out;
            out.value = n;
            out.witness = VertexSet::full(n);
            out.lower_bound = 0;
            out.timed_out = true;
            return out;
        }
        std::vector<int> deg(n, 0);
        for (const auto& e : h.edges())
            if (e.subset_of(keep))
                for (int v : e.elements()) ++deg[v - 1];
        int pick = 0;
        int pick_deg = -1;
        for (int v : keep.elements())
            if (deg[v - 1] > pick_deg) {
                pick_deg = deg[v - 1];
                pick = v;
            }
        // An uncolorable induced subhypergraph has at least one edge, so
        // some vertex has positive degree.
        assert(pick_deg > 0);
        keep.remove(pick);
        removed.add(pick);
    }
    const int ub = removed.size();

    constexpr std::size_t kMaxCores = 8;
    std::vector<VertexSet> cores;
    for (int s = 0; s < ub; ++s) {
        std::optional<DefectResult> done;
        bool stop = false;
        for_each_subset(n, s, [&](const VertexSet& y) {
            if (deadline.expired()) {
                stop = true;
                return false;
            }
            // Any feasible removal set must meet every uncolorable core.
            for (const auto& core : cores)
                if (!y.intersects(core)) return true;
            VertexSet rest = VertexSet::full(n);
            rest -= y;
            bool to = false;
            if (q_colorable(h, rest, q, deadline, &to)) {
                done = DefectResult{s, y, s, false};
                return false;
            }
            if (to) {
                stop = true;
                return false;
            }
            if (cores.size() < kMaxCores) {
                VertexSet core = minimize_core(h, rest, q, deadline);
                if (std::find(cores.begin(), cores.end(), core) == cores.end())
                    cores.push_back(std::move(core));
            }
            return true;
        });
        if (done.has_value()) return *done;
        if (stop) {
            DefectResult out;
            out.value = ub;
            out.witness = removed;
            out.lower_bound = s;
            out.timed_out = true;
            return out;
        }
    }
    return DefectResult{ub, removed, ub, false};
}

namespace {

/// Depth-first maximization of the alternation length over admissible signed
/// vectors, scanning positions in a fixed order. Placing the same symbol as
/// the previous nonzero one is dominated by placing zero (same future state,
/// fewer constraints), so branches are: each symbol different from the last,
/// then zero. Leaves therefore satisfy value = support size.
class AltSearcher {
public:
    AltSearcher(const Hypergraph& h, int q, std::vector<int> pi, const Deadline& deadline,
                int abort_at)
        : q_(q), n_(h.vertex_count()), pi_(std::move(pi)), abort_at_(abort_at),
          deadline_(deadline) {
        const auto& edges = h.edges();
        incident_.assign(n_, {});
        esize_.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            esize_.push_back(edges[i].size());
            for (int v : edges[i].elements()) incident_[v - 1].push_back(static_cast<int>(i));
        }
        count_.assign(edges.size(), std::vector<int>(q + 1, 0));
        assign_.assign(n_, 0);
    }

    void run() { dfs(0, 0, 0); }

    int best() const { return best_; }
    const std::vector<std::uint8_t>& best_vector() const { return best_vec_; }
    bool timed_out() const { return timed_out_; }
    bool aborted() const { return aborted_; }

private:
    /// True iff putting v into class j would complete an edge inside it.
    bool blocked(int v, int j) const {
        for (int ei : incident_[v - 1])
            if (count_[ei][j] == esize_[ei] - 1) return true;
        return false;
    }

    void place(int v, int j) {
        for (int ei : incident_[v - 1]) ++count_[ei][j];
    }

    void unplace(int v, int j) {
        for (int ei : incident_[v - 1]) --count_[ei][j];
    }

    void dfs(int i, int last, int len) {
        if (timed_out_ || aborted_) return;
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            timed_out_ = true;
            return;
        }
        if (len + (n_ - i) <= best_) return;
        if (i == n_) {
            best_ = len;
            best_vec_ = assign_;
            if (best_ >= abort_at_) aborted_ = true;
            return;
        }
        const int v = pi_[i];
        for (int j = 1; j <= q_; ++j) {
            if (j == last || blocked(v, j)) continue;
            assign_[v - 1] = static_cast<std::uint8_t>(j);
            place(v, j);
            dfs(i + 1, j, len + 1);
            unplace(v, j);
            assign_[v - 1] = 0;
            if (timed_out_ || aborted_) return;
        }
        dfs(i + 1, last, len);
    }

    int q_;
    int n_;
    std::vector<int> pi_;
    int abort_at_;
    Deadline deadline_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> esize_;
    std::vector<std::vector<int>> count_;
    std::vector<std::uint8_t> assign_;
    std::vector<std::uint8_t> best_vec_;
    int best_ = -1;
    bool timed_out_ = false;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
};

struct InnerEval {
    int value = 0;
    std::vector<std::uint8_t> vector;
    bool timed_out = false;
    bool aborted = false;
};

InnerEval eval_perm(const Hypergraph& h, int q, const std::vector<int>& pi,
                    const Deadline& deadline, int abort_at) {
    AltSearcher search(h, q, pi, deadline, abort_at);
    search.run();
    return InnerEval{search.best(), search.best_vector(), search.timed_out(), search.aborted()};
}

SignedVector to_signed(int q, const std::vector<std::uint8_t>& entries) {
    return SignedVector(q, entries);
}

} // namespace

AltResult max_alt_fixed_perm(const Hypergraph& h, int q, const std::vector<int>& pi,
                             const AltConfig& config, const SearchBudget& budget) {
    require_q(q);
    const int n = h.vertex_count();
    require_permutation(pi, n);
    if (n > config.exact_inner_cap)
        throw ResourceLimitError("vertex count exceeds the exact alternation cap (" +
                                 std::to_string(config.exact_inner_cap) +
                                 "); raise it or use the heuristic mode");
    auto eval = eval_perm(h, q, pi, Deadline::from(budget), INT_MAX);
    AltResult result;
    result.mode = AltMode::exact_inner;
    result.permutation = pi;
    result.value = std::max(eval.value, 0);
    result.timed_out = eval.timed_out;
    if (eval.value >= 0) result.vector = to_signed(q, eval.vector);
    return result;
}

AltResult alt_number(const Hypergraph& h, int q, AltMode mode, std::uint64_t seed,
                     const AltConfig& config, const SearchBudget& budget) {
    require_q(q);
    if (mode == AltMode::exact_inner)
        throw std::invalid_argument("exact_inner evaluates one permutation; call max_alt_fixed_perm");
    const int n = h.vertex_count();
    const Deadline deadline = Deadline::from(budget);

    AltResult result;
    result.mode = mode;
    result.seed = seed;
    // Trivial fallback: no admissible vector is longer than n.
    result.value = n;
    result.permutation = identity_permutation(n);
    if (n == 0) {
        result.vector = SignedVector(q, {});
        result.mode = mode;
        return result;
    }
    if (n > config.exact_inner_cap)
        throw ResourceLimitError("vertex count exceeds the exact alternation cap (" +
                                 std::to_string(config.exact_inner_cap) + ")");

    bool have_value = false;
    auto adopt = [&](const std::vector<int>& pi, const InnerEval& eval) {
        result.value = eval.value;
        result.permutation = pi;
        result.vector = to_signed(q, eval.vector);
        have_value = true;
    };

    if (mode == AltMode::exact) {
        if (n > config.exact_outer_cap)
            throw ResourceLimitError("vertex count exceeds the exact permutation cap (" +
                                     std::to_string(config.exact_outer_cap) +
                                     "); use the heuristic mode");
        auto pi = identity_permutation(n);
        do {
            // Reversal preserves run structure, hence every alternation
            // length; scanning one of each mirror pair suffices.
            if (n >= 2 && pi.front() > pi.back()) continue;
            const int abort_at = have_value ? result.value : INT_MAX;
            auto eval = eval_perm(h, q, pi, deadline, abort_at);
            if (eval.timed_out) {
                result.timed_out = true;
                return result;
            }
            if (eval.aborted) continue;
            if (!have_value || eval.value < result.value) adopt(pi, eval);
            if (result.value == 0) break;
        } while (std::next_permutation(pi.begin(), pi.end()));
        return result;
    }

    // Heuristic: exact inner maximum per permutation, adjacent-swap descent
    // with first improvement, plus seeded random restarts. Every completed
    // inner evaluation upper-bounds the true minimum, so partial runs stay
    // sound.
    auto climb = [&](std::vector<int> pi) {
        {
            const int abort_at = have_value ? result.value : INT_MAX;
            auto eval = eval_perm(h, q, pi, deadline, abort_at);
            if (eval.timed_out) {
                result.timed_out = true;
                return;
            }
            if (eval.aborted || (have_value && eval.value >= result.value)) return;
            adopt(pi, eval);
        }
        bool improved = true;
        while (improved) {
            improved = false;
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<int> next = result.permutation;
                std::swap(next[i], next[i + 1]);
                auto eval = eval_perm(h, q, next, deadline, result.value);
                if (eval.timed_out) {
                    result.timed_out = true;
                    return;
                }
                if (!eval.aborted && eval.value < result.value) {
                    adopt(next, eval);
                    improved = true;
                    break;
                }
            }
        }
    };

    result.restarts = config.heuristic_restarts;
    climb(identity_permutation(n));
    std::mt19937_64 rng(seed);
    for (int r = 0; r < config.heuristic_restarts && !result.timed_out; ++r) {
        auto pi = identity_permutation(n);
        std::shuffle(pi.begin(), pi.end(), rng);
        climb(std::move(pi));
    }
    return result;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BoundReport bound_report(const Hypergraph& h, int q, const BoundOptions& options) {
    require_q(q);
    BoundReport report;
    report.n = h.vertex_count();
    report.q = q;
    const Deadline deadline = Deadline::from(options.budget);

    KneserStructure ks = build_kneser(h, q, options.kg_edge_cap);
    report.kg_vertices = ks.kg.vertex_count();
    report.kg_edges = static_cast<std::int64_t>(ks.kg.edge_count());

    report.defect = cd(h, q, deadline.remaining());

    auto strategy = options.alt;
    if (strategy == BoundOptions::AltStrategy::automatic)
        strategy = report.n <= options.alt_config.exact_outer_cap
                       ? BoundOptions::AltStrategy::exact
                       : BoundOptions::AltStrategy::heuristic;
    if (strategy != BoundOptions::AltStrategy::off) {
        const auto mode = strategy == BoundOptions::AltStrategy::exact ? AltMode::exact
                                                                       : AltMode::heuristic;
        report.alt = alt_number(h, q, mode, options.seed, options.alt_config, deadline.remaining());
    }

    if (options.exact_chi || options.exact_local)
        report.chi = chromatic_number(ks.kg, deadline.remaining());
    if (options.exact_local && report.chi.has_value() && ks.kg.edge_count() > 0 &&
        report.chi->status == ChromaticResult::Status::exact) {
        const int max_t = options.local_max_t > 0
                              ? options.local_max_t
                              : default_local_max_t(ks.kg.vertex_count(), report.chi->value);
        report.chi_local = local_chromatic_number(ks.kg, max_t, deadline.remaining());
    }

    const int cdv = report.defect.value;
    const bool cd_ok = !report.defect.timed_out;
    const bool alt_ok = report.alt.has_value();
    const int alt_ub = alt_ok ? report.alt->value : 0;
    const int r_alt = report.n - alt_ub;
    const std::string alt_note =
        !alt_ok ? ""
                : (report.alt->mode == AltMode::exact ? "exact alternation number"
                                                      : "heuristic upper bound on the alternation number");

    auto add = [&](std::string name, std::string target, int bound, bool applicable, bool available,
                   std::string note) {
        report.bounds.push_back(TheoremBound{std::move(name), std::move(target), bound, applicable,
                                             available, std::move(note)});
    };
    add("dolnikov", "chi", cdv, q == 2, cd_ok, "chi >= cd^2");
    add("kriz", "chi", ceil_div(cdv, q - 1), true, cd_ok, "chi >= ceil(cd^q/(q-1))");
    add("alishahi_hajiabolhassan", "chi", alt_ok ? ceil_div(r_alt, q - 1) : 0, alt_ok, alt_ok,
        alt_ok ? "chi >= ceil((n-alt)/(q-1)); " + alt_note : "alternation number not computed");
    add("simonyi_tardos_local", "chi_local", ceil_div(cdv, 2) + 1, q == 2 && cdv >= 2, cd_ok,
        "chi_local >= ceil(cd^2/2)+1 when cd^2 >= 2");
    add("partite_local_defect", "chi_local",
        std::min(ceil_div(cdv, q) + 1, ceil_div(cdv, q - 1)), is_prime(q), cd_ok,
        "chi_local >= min(ceil(cd/p)+1, ceil(cd/(p-1))) for prime p");
    add("partite_local_alt", "chi_local",
        alt_ok ? std::min(ceil_div(r_alt, q) + 1, ceil_div(r_alt, q - 1)) : 0,
        is_prime(q) && alt_ok, alt_ok,
        alt_ok ? "chi_local with n-alt in place of cd; " + alt_note : "alternation number not computed");

    auto violate = [&](std::string msg) {
        report.consistent = false;
        report.violations.push_back(std::move(msg));
    };
    for (const auto& b : report.bounds) {
        if (!b.applicable || !b.available) continue;
        if (b.target == "chi" && report.chi.has_value()) {
            // A timed-out chi still carries a witness-backed upper bound,
            // which any valid lower bound must respect.
            const bool exact = report.chi->status == ChromaticResult::Status::exact;
            const int ceiling = exact ? report.chi->value : report.chi->upper_bound;
            if (report.chi->status != ChromaticResult::Status::unbounded && b.bound > ceiling)
                violate(b.name + " bound " + std::to_string(b.bound) + " exceeds chi ceiling " +
                        std::to_string(ceiling));
        }
        if (b.target == "chi_local" && report.chi_local.has_value() &&
            b.bound > report.chi_local->value)
            violate(b.name + " bound " + std::to_string(b.bound) + " exceeds local value " +
                    std::to_string(report.chi_local->value));
    }
    if (report.chi.has_value() && report.chi->status == ChromaticResult::Status::exact &&
        report.chi_local.has_value() && report.chi_local->value > report.chi->value)
        violate("local chromatic value exceeds chi");
    if (cd_ok && alt_ok && report.alt->mode == AltMode::exact && !report.alt->timed_out &&
        r_alt < cdv)
        violate("n - alt is below the defect");

    return report;
}

} // namespace klab
