#include "klab/rainbow.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "klab/errors.hpp"

#include "detail/deadline.hpp"

namespace klab {

namespace {

using detail::Deadline;

/// Splitmix64 step; the counter-based sampler derives one stream per index
/// so that samples depend only on (seed, index).
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class RainbowSearcher {
public:
    /// plain_order searches candidates in id order with no heuristics; it is
    /// the independent re-verification used on suspected counterexamples.
    RainbowSearcher(const KneserStructure& ks, const Coloring& c, int r, bool plain_order)
        : ks_(ks), c_(c), p_(ks.q), r_(r), sizes_(part_sizes(r, ks.q)) {
        const int kgn = ks.kg.vertex_count();
        order_.resize(kgn);
        std::iota(order_.begin(), order_.end(), 1);
        if (!plain_order) {
            std::vector<int> class_size(c.t + 1, 0);
            for (int v = 1; v <= kgn; ++v) ++class_size[c.colors[v - 1]];
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
                const int ca = c.colors[a - 1];
                const int cb = c.colors[b - 1];
                if (class_size[ca] != class_size[cb]) return class_size[ca] > class_size[cb];
                return ca < cb;
            });
        }
        mask_.assign(p_, VertexSet(ks.base.vertex_count()));
        used_.assign(p_, std::vector<char>(c.t + 1, 0));
        chosen_.assign(p_, {});
        first_idx_.assign(p_, -1);
    }

    std::optional<PartiteWitness> run() {
        if (r_ > ks_.kg.vertex_count()) return std::nullopt;
        if (!fill(0, sizes_[0], 0)) return std::nullopt;
        PartiteWitness w;
        w.parts = chosen_;
        w.r = r_;
        return w;
    }

private:
    bool fill(int part, int need, int start) {
        if (need == 0) {
            const int next = part + 1;
            if (next == p_) return true;
            if (sizes_[next] == 0) return fill(next, 0, 0);
            // Equal-size parts are interchangeable; force their first picks
            // into increasing candidate order to enumerate each witness once.
            int s = 0;
            if (sizes_[next] == sizes_[part]) s = first_idx_[part] + 1;
            return fill(next, sizes_[next], s);
        }
        const int last_start = static_cast<int>(order_.size()) - need;
        for (int idx = start; idx <= last_start; ++idx) {
            const int v = order_[idx];
            const int col = c_.colors[v - 1];
            if (used_[part][col] != 0) continue;
            const VertexSet& be = ks_.base_edge(v);
            bool ok = true;
            for (int i = 0; i < part && ok; ++i)
                if (be.intersects(mask_[i])) ok = false;
            if (!ok) continue;
            const VertexSet saved = mask_[part];
            mask_[part] |= be;
            used_[part][col] = 1;
            chosen_[part].push_back(v);
            if (chosen_[part].size() == 1) first_idx_[part] = idx;
            if (fill(part, need - 1, idx + 1)) return true;
            chosen_[part].pop_back();
            used_[part][col] = 0;
            mask_[part] = saved;
        }
        return false;
    }

    const KneserStructure& ks_;
    const Coloring& c_;
    int p_;
    int r_;
    std::vector<int> sizes_;
    std::vector<int> order_;
    std::vector<VertexSet> mask_;
    std::vector<std::vector<char>> used_;
    std::vector<std::vector<int>> chosen_;
    std::vector<int> first_idx_;
};

std::optional<PartiteWitness> search(const KneserStructure& ks, const Coloring& c, int r,
                                     bool plain_order) {
    if (r == 0) return PartiteWitness{std::vector<std::vector<int>>(ks.q), 0};
    return RainbowSearcher(ks, c, r, plain_order).run();
}

void require_proper(const KneserStructure& ks, const Coloring& c) {
    validate_coloring(c, ks.kg.vertex_count());
    if (!is_proper(ks.kg, c)) throw std::invalid_argument("coloring is not proper");
}

} // namespace

std::vector<int> part_sizes(int r, int p) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    std::vector<int> sizes(p, r / p);
    for (int i = 0; i < r % p; ++i) ++sizes[i];
    return sizes;
}

std::vector<std::vector<int>> witness_colors(const Coloring& c, const PartiteWitness& w) {
    std::vector<std::vector<int>> out;
    out.reserve(w.parts.size());
    for (const auto& part : w.parts) {
        std::vector<int> colors;
        colors.reserve(part.size());
        for (int v : part) colors.push_back(c.colors[v - 1]);
        out.push_back(std::move(colors));
    }
    return out;
}

std::optional<PartiteWitness> find_rainbow_witness(const KneserStructure& ks, const Coloring& c,
                                                   int r) {
    require_proper(ks, c);
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    return search(ks, c, r, false);
}

bool validate_witness(const KneserStructure& ks, const Coloring& c, int r,
                      const PartiteWitness& w, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why != nullptr) *why = reason;
        return false;
    };
    const int p = ks.q;
    if (static_cast<int>(w.parts.size()) != p) return fail("part count differs from p");
    if (w.r != r) return fail("recorded r differs from requested r");
    int total = 0;
    std::size_t smallest = ks.kg.vertex_count() + 1;
    std::size_t largest = 0;
    std::vector<char> seen(ks.kg.vertex_count() + 1, 0);
    for (const auto& part : w.parts) {
        total += static_cast<int>(part.size());
        smallest = std::min(smallest, part.size());
        largest = std::max(largest, part.size());
        std::vector<char> colors_seen(c.t + 1, 0);
        for (int v : part) {
            if (v < 1 || v > ks.kg.vertex_count()) return fail("vertex id out of range");
            if (seen[v] != 0) return fail("vertex repeated across the witness");
            seen[v] = 1;
            const int col = c.colors[v - 1];
            if (colors_seen[col] != 0) return fail("part repeats a color");
            colors_seen[col] = 1;
        }
    }
    if (total != r) return fail("part sizes do not sum to r");
    if (largest > smallest + 1) return fail("part sizes differ by more than one");
    for (std::size_t i = 0; i < w.parts.size(); ++i)
        for (std::size_t j = i + 1; j < w.parts.size(); ++j)
            for (int u : w.parts[i])
                for (int v : w.parts[j])
                    if (ks.base_edge(u).intersects(ks.base_edge(v)))
                        return fail("cross-part base edges intersect");
    return true;
}

SweepReport sweep_verify(const Hypergraph& h, int p, const SweepOptions& options) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    SweepReport report;
    report.p = p;
    report.seed = options.seed;
    report.prime_p = is_prime(p);
    report.forced = options.force;
    if (!report.prime_p && !options.force)
        throw std::invalid_argument(
            "the guarantee is only known for prime p; pass force to explore anyway");
    const Deadline deadline = Deadline::from(options.budget);

    KneserStructure ks = build_kneser(h, p, options.kg_edge_cap);
    report.kg_vertices = ks.kg.vertex_count();
    report.kg_edges = static_cast<std::int64_t>(ks.kg.edge_count());

    if (options.r_mode == SweepOptions::RMode::defect) {
        report.r_mode = "cd";
        auto defect = cd(h, p, deadline.remaining());
        if (defect.timed_out) {
            report.timed_out = true;
            report.exhaustive = false;
            return report;
        }
        report.r = defect.value;
    } else {
        report.r_mode = "alt";
        const auto mode =
            h.vertex_count() <= options.alt_config.exact_outer_cap ? AltMode::exact
                                                                   : AltMode::heuristic;
        auto alt = alt_number(h, p, mode, options.seed, options.alt_config, deadline.remaining());
        if (alt.timed_out && !alt.vector.has_value()) {
            report.timed_out = true;
            report.exhaustive = false;
            return report;
        }
        // A heuristic alternation value is an upper bound, so r is at most
        // the guaranteed size; any witness of the guaranteed size restricts
        // to one of size r, so checking the smaller r stays sound.
        report.r = h.vertex_count() - alt.value;
    }

    int max_t = options.max_t;
    if (max_t <= 0) {
        auto chi = chromatic_number(ks.kg, deadline.remaining());
        if (chi.status == ChromaticResult::Status::unbounded) {
            // Kneser edges have q >= 2 vertices, so this cannot happen.
            throw std::logic_error("Kneser hypergraph reported unbounded chi");
        }
        if (chi.status == ChromaticResult::Status::timed_out) {
            report.timed_out = true;
            report.exhaustive = false;
            return report;
        }
        report.chi = chi.value;
        max_t = chi.value + 1;
    }
    report.max_t = max_t;

    auto examine = [&](const Coloring& c) {
        ++report.colorings_checked;
        if (!is_proper(ks.kg, c)) {
            ++report.improper_skipped;
            return;
        }
        auto witness = search(ks, c, report.r, false);
        if (witness.has_value()) {
            std::string why;
            if (!validate_witness(ks, c, report.r, *witness, &why))
                throw std::logic_error("witness failed independent validation: " + why);
            ++report.witnesses_found;
            return;
        }
        // Independent plain-order re-verification before declaring a
        // counterexample.
        auto recheck = search(ks, c, report.r, true);
        if (recheck.has_value()) {
            std::string why;
            if (!validate_witness(ks, c, report.r, *recheck, &why))
                throw std::logic_error("witness failed independent validation: " + why);
            ++report.witnesses_found;
            return;
        }
        ++report.counterexample_count;
        if (static_cast<int>(report.counterexamples.size()) < options.max_counterexamples)
            report.counterexamples.push_back(c);
    };

    bool stopped = false;
    const bool completed = enumerate_proper_colorings(
        ks.kg, max_t, true, [&](const Coloring& c) {
            if (deadline.expired()) {
                report.timed_out = true;
                stopped = true;
                return false;
            }
            if (report.colorings_checked >= options.enumeration_cap) {
                report.capped = true;
                stopped = true;
                return false;
            }
            examine(c);
            return true;
        });
    assert(completed == !stopped);
    report.exhaustive = completed && !report.timed_out;

    if (report.capped) {
        // Continue with seeded sampling so the report still covers ground
        // beyond the cap, explicitly flagged non-exhaustive.
        for (int i = 0; i < options.samples; ++i) {
            if (deadline.expired()) {
                report.timed_out = true;
                break;
            }
            auto c = random_proper_coloring(ks.kg, max_t,
                                            mix(options.seed ^ static_cast<std::uint64_t>(i)));
            if (!c.has_value()) break;
            ++report.sampled;
            examine(*c);
        }
    }
    return report;
}

} // namespace klab
