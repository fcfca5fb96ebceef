#include "klab/fan.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>
#include <thread>

#include "klab/errors.hpp"

#include "detail/deadline.hpp"

namespace klab {

namespace {

using detail::Deadline;

std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t pow_saturated(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (out > INT64_MAX / base) return INT64_MAX;
        out *= base;
    }
    return out;
}

} // namespace

SdDomain::SdDomain(int q, int n, std::int64_t vertex_cap) : q_(q), n_(n) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const std::int64_t total = pow_saturated(q + 1, n);
    if (total > vertex_cap)
        throw ResourceLimitError("subdivision has " + std::to_string(total) +
                                 " vertices, above the cap of " + std::to_string(vertex_cap));
    const std::int64_t count = total - 1;
    vertices_.reserve(count);
    for (std::int64_t value = 1; value <= count; ++value) {
        std::vector<std::uint8_t> entries(n);
        std::int64_t rest = value;
        for (int j = 0; j < n; ++j) {
            entries[j] = static_cast<std::uint8_t>(rest % (q + 1));
            rest /= q + 1;
        }
        vertices_.emplace_back(q, std::move(entries));
    }

    rep_.assign(count, -1);
    shift_.assign(count, 0);
    ordinal_.assign(count, -1);
    for (std::int64_t i = 0; i < count; ++i) {
        if (rep_[i] >= 0) continue;
        // The orbit of vertex i under sign rotation. The action is free on
        // nonzero vectors: a rotation fixing one nonzero entry is trivial.
        std::vector<std::int64_t> orbit(q_);
        std::int64_t least = i;
        for (int a = 0; a < q_; ++a) {
            orbit[a] = index_of(rotate(vertices_[i], a));
            if (vertices_[orbit[a]].entries < vertices_[least].entries) least = orbit[a];
        }
        for (int a = 0; a < q_; ++a)
            for (int b = a + 1; b < q_; ++b)
                if (orbit[a] == orbit[b]) throw std::logic_error("group action is not free");
        const int base_shift = static_cast<int>(std::find(orbit.begin(), orbit.end(), least) -
                                                orbit.begin());
        for (int a = 0; a < q_; ++a) {
            rep_[orbit[a]] = least;
            // vertex = rotate(vertex(i), a) = rotate(rep, a - base_shift).
            shift_[orbit[a]] = (a - base_shift + q_) % q_;
        }
    }
    for (std::int64_t i = 0; i < count; ++i)
        if (rep_[i] == i) {
            ordinal_[i] = static_cast<std::int64_t>(reps_.size());
            reps_.push_back(i);
        }
    assert(static_cast<std::int64_t>(reps_.size()) == count / q_);
}

std::int64_t SdDomain::index_of(const SignedVector& x) const {
    if (x.q != q_ || x.length() != n_)
        throw std::invalid_argument("vector does not belong to this domain");
    std::int64_t value = 0;
    for (int j = n_ - 1; j >= 0; --j) value = value * (q_ + 1) + x.entries[j];
    if (value == 0) throw std::invalid_argument("the zero vector is not a domain vertex");
    return value - 1;
}

Labeling Labeling::from_orbit_choices(const SdDomain& domain, int m,
                                      const std::vector<FanLabel>& choices) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (static_cast<std::int64_t>(choices.size()) != domain.orbit_count())
        throw std::invalid_argument("need exactly one choice per orbit");
    for (const auto& choice : choices)
        if (choice.sign < 1 || choice.sign > domain.q() || choice.abs < 1 || choice.abs > m)
            throw std::invalid_argument("orbit choice out of range");
    Labeling out;
    out.q = domain.q();
    out.n = domain.n();
    out.m = m;
    out.labels.resize(domain.vertex_count());
    for (std::int64_t i = 0; i < domain.vertex_count(); ++i) {
        const FanLabel& base = choices[domain.orbit_ordinal(i)];
        out.labels[i] =
            FanLabel{rotate_sign(base.sign, domain.shift_from_rep(i), domain.q()), base.abs};
    }
    return out;
}

LabelingCheck check_labeling(const SdDomain& domain, const Labeling& labeling) {
    LabelingCheck out;
    if (labeling.q != domain.q() || labeling.n != domain.n()) {
        out.reason = "labeling and domain shapes differ";
        return out;
    }
    if (static_cast<std::int64_t>(labeling.labels.size()) != domain.vertex_count())
        throw std::invalid_argument("labeling is not total");
    for (std::int64_t i = 0; i < domain.vertex_count(); ++i) {
        const FanLabel& l = labeling.labels[i];
        if (l.sign < 1 || l.sign > domain.q() || l.abs < 1 || l.abs > labeling.m) {
            out.reason = "label out of range at vertex " + std::to_string(i);
            out.offending = {i, i};
            return out;
        }
    }
    for (std::int64_t i = 0; i < domain.vertex_count(); ++i) {
        for (int a = 1; a < domain.q(); ++a) {
            const std::int64_t j = domain.index_of(rotate(domain.vertex(i), a));
            const FanLabel expect{rotate_sign(labeling.labels[i].sign, a, domain.q()),
                                  labeling.labels[i].abs};
            if (!(labeling.labels[j] == expect)) {
                out.reason = "equivariance broken on the orbit of representative " +
                             std::to_string(domain.rep_of(i));
                out.offending = {i, j};
                return out;
            }
        }
    }
    for (std::int64_t i = 0; i < domain.vertex_count(); ++i)
        for (std::int64_t j = i + 1; j < domain.vertex_count(); ++j) {
            if (!is_comparable(domain.vertex(i), domain.vertex(j))) continue;
            if (labeling.labels[i].abs == labeling.labels[j].abs &&
                labeling.labels[i].sign != labeling.labels[j].sign) {
                out.reason = "comparable pair shares an absolute value with different signs";
                out.offending = {i, j};
                return out;
            }
        }
    out.proper = true;
    return out;
}

namespace {

/// Static chain-search scaffolding over one domain: vertices grouped by
/// support size and the covering relation between consecutive sizes.
struct ChainIndex {
    std::vector<std::vector<std::int64_t>> by_support;  // size s -> indices, ascending
    std::vector<std::vector<std::int64_t>> extensions;  // index -> next-size dominators

    explicit ChainIndex(const SdDomain& domain) {
        by_support.assign(domain.n() + 1, {});
        for (std::int64_t i = 0; i < domain.vertex_count(); ++i)
            by_support[domain.vertex(i).support_size()].push_back(i);
        extensions.assign(domain.vertex_count(), {});
        for (int s = 1; s < domain.n(); ++s)
            for (std::int64_t i : by_support[s])
                for (std::int64_t j : by_support[s + 1])
                    if (dominated_by(domain.vertex(i), domain.vertex(j)))
                        extensions[i].push_back(j);
    }
};

/// The image of a full chain is an alternating simplex iff the n labels have
/// pairwise distinct absolute values and, sorted by absolute value, their
/// signs alternate. The sort order is independent of the chain order.
bool alternating_image(const std::vector<FanLabel>& labels,
                       const std::vector<std::int64_t>& path) {
    std::vector<FanLabel> sorted;
    sorted.reserve(path.size());
    for (std::int64_t i : path) sorted.push_back(labels[i]);
    std::sort(sorted.begin(), sorted.end(),
              [](const FanLabel& a, const FanLabel& b) { return a.abs < b.abs; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].sign == sorted[i - 1].sign) return false;
    return true;
}

bool chain_dfs(const ChainIndex& index, const std::vector<FanLabel>& labels, std::int64_t at,
               int depth, int n, std::uint64_t used_abs, std::vector<std::int64_t>& path) {
    path.push_back(at);
    if (depth == n) {
        if (alternating_image(labels, path)) return true;
        path.pop_back();
        return false;
    }
    for (std::int64_t next : index.extensions[at]) {
        const std::uint64_t bit = 1ULL << labels[next].abs;
        if (used_abs & bit) continue;
        if (chain_dfs(index, labels, next, depth + 1, n, used_abs | bit, path)) return true;
    }
    path.pop_back();
    return false;
}

std::optional<std::vector<std::int64_t>> find_chain_indices(const ChainIndex& index,
                                                            const std::vector<FanLabel>& labels,
                                                            int n) {
    std::vector<std::int64_t> path;
    for (std::int64_t root : index.by_support[1])
        if (chain_dfs(index, labels, root, 1, n, 1ULL << labels[root].abs, path)) return path;
    return std::nullopt;
}

} // namespace

std::optional<AlternatingChain> find_alternating_chain(const SdDomain& domain,
                                                       const Labeling& labeling) {
    auto verdict = check_labeling(domain, labeling);
    if (!verdict.proper)
        throw std::invalid_argument("labeling is not proper: " + verdict.reason);
    if (labeling.m > 63)
        throw std::invalid_argument("absolute values above 63 are not supported");
    ChainIndex index(domain);
    auto path = find_chain_indices(index, labeling.labels, domain.n());
    if (!path.has_value()) return std::nullopt;
    AlternatingChain chain;
    for (std::int64_t i : *path) {
        chain.vectors.push_back(domain.vertex(i));
        chain.labels.push_back(labeling.labels[i]);
    }
    return chain;
}

FanReport exhaustive_fan_check(int q, int n, int m, const FanOptions& options) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (m > 63) throw std::invalid_argument("absolute values above 63 are not supported");
    SdDomain domain(q, n, options.vertex_cap);

    FanReport report;
    report.q = q;
    report.n = n;
    report.m = m;
    report.seed = options.seed;
    report.vertices = domain.vertex_count();
    report.orbits = domain.orbit_count();
    const std::int64_t radix = static_cast<std::int64_t>(q) * m;
    report.total_labelings = pow_saturated(radix, domain.orbit_count());

    const bool exhaustive = report.total_labelings <= options.enumeration_cap;
    if (!exhaustive && options.samples <= 0)
        throw ResourceLimitError("labeling space of " + std::to_string(report.total_labelings) +
                                 " exceeds the cap of " + std::to_string(options.enumeration_cap) +
                                 "; request sampling");
    report.exhaustive = exhaustive;

    // The chain index and pair list are only worth building once the run is
    // known to fit the caps.
    ChainIndex chain_index(domain);

    // Comparable pairs among subdivision vertices, fixed once; properness of
    // an equivariant labeling is a scan over this list.
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t i = 0; i < domain.vertex_count(); ++i)
        for (std::int64_t j = i + 1; j < domain.vertex_count(); ++j)
            if (is_comparable(domain.vertex(i), domain.vertex(j))) pairs.emplace_back(i, j);

    const std::int64_t jobs = exhaustive ? report.total_labelings : options.samples;
    const Deadline deadline = Deadline::from(options.budget);

    struct WorkerResult {
        std::int64_t enumerated = 0;
        std::int64_t proper = 0;
        std::int64_t with_chain = 0;
        std::int64_t violations = 0;
        std::int64_t first_violation = -1;
        bool timed_out = false;
    };

    const int workers = static_cast<int>(
        std::max<std::int64_t>(1, std::min<std::int64_t>(options.workers, jobs == 0 ? 1 : jobs)));
    std::vector<WorkerResult> results(workers);

    auto work = [&](int w, std::int64_t lo, std::int64_t hi) {
        WorkerResult& res = results[w];
        std::vector<FanLabel> choices(domain.orbit_count());
        std::vector<FanLabel> labels(domain.vertex_count());
        for (std::int64_t job = lo; job < hi; ++job) {
            if ((res.enumerated & 1023) == 0 && deadline.expired()) {
                res.timed_out = true;
                return;
            }
            const std::int64_t labeling_index =
                exhaustive ? job
                           : static_cast<std::int64_t>(
                                 mix(options.seed ^ static_cast<std::uint64_t>(job)) %
                                 static_cast<std::uint64_t>(report.total_labelings));
            std::int64_t rest = labeling_index;
            for (std::int64_t k = 0; k < domain.orbit_count(); ++k) {
                const int digit = static_cast<int>(rest % radix);
                rest /= radix;
                choices[k] = FanLabel{1 + digit % q, 1 + digit / q};
            }
            for (std::int64_t i = 0; i < domain.vertex_count(); ++i) {
                const FanLabel& base = choices[domain.orbit_ordinal(i)];
                labels[i] = FanLabel{rotate_sign(base.sign, domain.shift_from_rep(i), q), base.abs};
            }
            ++res.enumerated;
            bool proper = true;
            for (const auto& [a, b] : pairs)
                if (labels[a].abs == labels[b].abs && labels[a].sign != labels[b].sign) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            ++res.proper;
            if (find_chain_indices(chain_index, labels, n).has_value()) {
                ++res.with_chain;
            } else {
                ++res.violations;
                if (res.first_violation < 0) res.first_violation = labeling_index;
            }
        }
    };

    if (workers == 1) {
        work(0, 0, jobs);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t stride = (jobs + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t lo = std::min<std::int64_t>(jobs, w * stride);
            const std::int64_t hi = std::min<std::int64_t>(jobs, lo + stride);
            pool.emplace_back(work, w, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    std::int64_t first_violation = -1;
    for (const auto& res : results) {
        report.enumerated += res.enumerated;
        report.proper += res.proper;
        report.with_chain += res.with_chain;
        report.violations += res.violations;
        report.timed_out = report.timed_out || res.timed_out;
        if (res.first_violation >= 0 &&
            (first_violation < 0 || res.first_violation < first_violation))
            first_violation = res.first_violation;
    }
    if (!exhaustive) report.sampled = report.enumerated;
    if (report.timed_out) report.exhaustive = false;
    if (first_violation >= 0) {
        std::vector<FanLabel> choices(domain.orbit_count());
        std::int64_t rest = first_violation;
        for (std::int64_t k = 0; k < domain.orbit_count(); ++k) {
            const int digit = static_cast<int>(rest % radix);
            rest /= radix;
            choices[k] = FanLabel{1 + digit % q, 1 + digit / q};
        }
        report.counterexample = std::move(choices);
    }
    return report;
}

} // namespace klab
