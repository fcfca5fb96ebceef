#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klab/chromatic.hpp"
#include "klab/signed_vector.hpp"

namespace klab {

inline constexpr std::int64_t kDefaultSdVertexCap = 4'194'304;

/// Label of one subdivision vertex: a group element (exponent in 1..q) and an
/// absolute value in 1..m.
struct FanLabel {
    int sign = 1;
    int abs = 1;

    bool operator==(const FanLabel&) const = default;
};

inline int rotate_sign(int sign, int a, int q) {
    return 1 + (sign - 1 + (a % q + q) % q) % q;
}

/// The vertex set of the barycentric subdivision of the n-fold join of Z_q:
/// all nonzero signed vectors of length n, indexed 0..(q+1)^n - 2 by their
/// base-(q+1) digit value minus one. Carries the free Z_q orbit structure
/// with lexicographically least representatives.
class SdDomain {
public:
    SdDomain(int q, int n, std::int64_t vertex_cap = kDefaultSdVertexCap);

    int q() const { return q_; }
    int n() const { return n_; }
    std::int64_t vertex_count() const { return static_cast<std::int64_t>(vertices_.size()); }
    const SignedVector& vertex(std::int64_t index) const { return vertices_[index]; }
    std::int64_t index_of(const SignedVector& x) const;

    std::int64_t orbit_count() const { return static_cast<std::int64_t>(reps_.size()); }
    /// Representative indices in ascending order.
    const std::vector<std::int64_t>& orbit_reps() const { return reps_; }
    std::int64_t rep_of(std::int64_t index) const { return rep_[index]; }
    /// The a with rotate(vertex(rep_of(i)), a) == vertex(i).
    int shift_from_rep(std::int64_t index) const { return shift_[index]; }
    /// Position of rep_of(index) within orbit_reps().
    std::int64_t orbit_ordinal(std::int64_t index) const { return ordinal_[rep_[index]]; }

private:
    int q_;
    int n_;
    std::vector<SignedVector> vertices_;
    std::vector<std::int64_t> rep_;
    std::vector<int> shift_;
    std::vector<std::int64_t> ordinal_;
    std::vector<std::int64_t> reps_;
};

/// Total assignment of labels to subdivision vertices, aligned with SdDomain
/// indices.
struct Labeling {
    int q = 2;
    int n = 1;
    int m = 1;
    std::vector<FanLabel> labels;

    /// Extends free choices on orbit representatives equivariantly: the
    /// rotated vertex gets the rotated sign and the same absolute value.
    static Labeling from_orbit_choices(const SdDomain& domain, int m,
                                       const std::vector<FanLabel>& choices);
};

struct LabelingCheck {
    bool proper = false;
    /// Empty when proper; otherwise names the first violated condition in
    /// scan order (ranges, equivariance, comparable pairs).
    std::string reason;
    std::optional<std::pair<std::int64_t, std::int64_t>> offending;
};

/// Verifies totality, equivariance, and the simplicial condition: no
/// comparable pair may share an absolute value with different signs.
LabelingCheck check_labeling(const SdDomain& domain, const Labeling& labeling);

struct AlternatingChain {
    /// Strictly increasing chain in the domination order, support sizes 1..n.
    std::vector<SignedVector> vectors;
    /// labels[i] labels vectors[i]. Absolute values are pairwise distinct and
    /// the signs alternate once the labels are sorted by absolute value; the
    /// sort order need not match the chain order.
    std::vector<FanLabel> labels;
};

/// First alternating chain in deterministic order, or nullopt. Requires the
/// labeling to pass check_labeling.
std::optional<AlternatingChain> find_alternating_chain(const SdDomain& domain,
                                                       const Labeling& labeling);

struct FanOptions {
    /// Exhaustive enumeration refuses more labelings than this unless
    /// sampling is requested.
    std::int64_t enumeration_cap = 10'000'000;
    /// 0 = exhaustive only; otherwise the number of sampled labelings when
    /// over the cap.
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    SearchBudget budget;
    std::int64_t vertex_cap = kDefaultSdVertexCap;
};

struct FanReport {
    int q = 0;
    int n = 0;
    int m = 0;
    std::int64_t vertices = 0;
    std::int64_t orbits = 0;
    /// (q*m)^orbits, saturated at INT64_MAX.
    std::int64_t total_labelings = 0;
    bool exhaustive = true;
    std::int64_t enumerated = 0;
    std::int64_t proper = 0;
    std::int64_t with_chain = 0;
    /// Proper labelings with no alternating chain; a nonzero count is a
    /// counterexample to the verified statement and is never silently
    /// dropped.
    std::int64_t violations = 0;
    std::int64_t sampled = 0;
    std::uint64_t seed = 0;
    bool timed_out = false;
    /// Orbit-representative choices of the first violating labeling, aligned
    /// with SdDomain::orbit_reps().
    std::optional<std::vector<FanLabel>> counterexample;
};

/// Enumerates (or samples) every equivariant labeling by free choice on orbit
/// representatives, filters the proper ones, and checks each for an
/// alternating chain. Workers partition the choice space; aggregated counts
/// and the reported counterexample are independent of the worker count.
FanReport exhaustive_fan_check(int q, int n, int m, const FanOptions& options = {});

} // namespace klab
