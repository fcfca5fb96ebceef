#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <tuple>

#include "doctest.h"

#include "klab/errors.hpp"
#include "klab/fan.hpp"

using namespace klab;

namespace {

/// Chain enumerator sharing nothing with the library search: walks every
/// strictly increasing support chain 1..n and tests the sorted-label
/// condition directly.
bool naive_has_chain(const SdDomain& d, const Labeling& lab) {
    const int n = d.n();
    std::vector<std::int64_t> path;
    std::function<bool(int)> grow = [&](int depth) -> bool {
        if (depth == n) {
            std::vector<FanLabel> labels;
            for (auto idx : path) labels.push_back(lab.labels[idx]);
            std::sort(labels.begin(), labels.end(),
                      [](const FanLabel& a, const FanLabel& b) { return a.abs < b.abs; });
            for (std::size_t i = 1; i < labels.size(); ++i) {
                if (labels[i].abs == labels[i - 1].abs) return false;
                if (labels[i].sign == labels[i - 1].sign) return false;
            }
            return true;
        }
        for (std::int64_t idx = 0; idx < d.vertex_count(); ++idx) {
            const auto& x = d.vertex(idx);
            if (x.support_size() != depth + 1) continue;
            if (depth > 0 && !dominated_by(d.vertex(path.back()), x)) continue;
            path.push_back(idx);
            if (grow(depth + 1)) return true;
            path.pop_back();
        }
        return false;
    };
    return grow(0);
}

/// Odometer over all (q*m)^orbits choice vectors.
template <typename Visit>
void for_each_choice(int q, int m, std::int64_t orbits, Visit visit) {
    std::vector<FanLabel> choices(orbits, FanLabel{1, 1});
    while (true) {
        visit(choices);
        std::int64_t i = 0;
        while (i < orbits) {
            auto& c = choices[i];
            if (c.sign < q) {
                ++c.sign;
                break;
            }
            c.sign = 1;
            if (c.abs < m) {
                ++c.abs;
                break;
            }
            c.abs = 1;
            ++i;
        }
        if (i == orbits) return;
    }
}

} // namespace

TEST_CASE("domain enumeration and orbit structure") {
    const SdDomain d(2, 3);
    CHECK(d.vertex_count() == 26); // 3^3 - 1
    CHECK(d.orbit_count() == 13);
    const SdDomain d3(3, 2);
    CHECK(d3.vertex_count() == 15); // ((q+1)^n - 1) with q = 3, n = 2
    CHECK(d3.orbit_count() == 5);
    const SdDomain d4(4, 2);
    CHECK(d4.vertex_count() == 24);
    CHECK(d4.orbit_count() == 6);

    for (std::int64_t i = 0; i < d3.vertex_count(); ++i) {
        const auto& x = d3.vertex(i);
        CHECK_FALSE(x.is_zero());
        CHECK(d3.index_of(x) == i);
        const auto rep = d3.rep_of(i);
        CHECK(rotate(d3.vertex(rep), d3.shift_from_rep(i)) == x);
        // Representatives are the entry-wise lexicographically least of their
        // orbit, which need not be the least index.
        CHECK(d3.vertex(rep).entries <= x.entries);
        CHECK(d3.rep_of(rep) == rep);
        CHECK(d3.orbit_ordinal(i) ==
              std::distance(d3.orbit_reps().begin(),
                            std::find(d3.orbit_reps().begin(), d3.orbit_reps().end(), rep)));
    }
    CHECK(std::is_sorted(d3.orbit_reps().begin(), d3.orbit_reps().end()));
    CHECK_THROWS_AS(d3.index_of(SignedVector(3, {0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(SdDomain(2, 12, 1000), ResourceLimitError);
}

TEST_CASE("equivariant extension from orbit choices") {
    const SdDomain d(3, 2);
    std::vector<FanLabel> choices(d.orbit_count(), FanLabel{2, 1});
    const auto lab = Labeling::from_orbit_choices(d, 2, choices);
    CHECK(lab.q == 3);
    CHECK(lab.n == 2);
    CHECK(lab.m == 2);
    REQUIRE(static_cast<std::int64_t>(lab.labels.size()) == d.vertex_count());
    for (std::int64_t i = 0; i < d.vertex_count(); ++i) {
        const auto& at_rep = lab.labels[d.rep_of(i)];
        CHECK(lab.labels[i].abs == at_rep.abs);
        CHECK(lab.labels[i].sign == rotate_sign(at_rep.sign, d.shift_from_rep(i), 3));
    }

    CHECK_THROWS_AS(Labeling::from_orbit_choices(d, 2, {}), std::invalid_argument);
    std::vector<FanLabel> bad(d.orbit_count(), FanLabel{4, 1});
    CHECK_THROWS_AS(Labeling::from_orbit_choices(d, 2, bad), std::invalid_argument);
}

TEST_CASE("labeling check catches the simplicial violation") {
    const SdDomain d(2, 2);
    // Give every orbit the same sign and absolute value: the comparable pair
    // (+,0) < (+,+) keeps equal signs, but (+,0) < (+,-) pairs a rotated
    // label, producing a shared absolute value with different signs.
    std::vector<FanLabel> choices(d.orbit_count(), FanLabel{1, 1});
    const auto lab = Labeling::from_orbit_choices(d, 1, choices);
    const auto check = check_labeling(d, lab);
    CHECK_FALSE(check.proper);
    CHECK_FALSE(check.reason.empty());
    REQUIRE(check.offending.has_value());
    const auto [a, b] = *check.offending;
    CHECK(is_comparable(d.vertex(a), d.vertex(b)));
    CHECK(lab.labels[a].abs == lab.labels[b].abs);
    CHECK(lab.labels[a].sign != lab.labels[b].sign);
}

TEST_CASE("proper labelings admit chains that pass independent validation") {
    const SdDomain d(2, 2);
    int proper_seen = 0;
    for_each_choice(2, 2, d.orbit_count(), [&](const std::vector<FanLabel>& choices) {
        const auto lab = Labeling::from_orbit_choices(d, 2, choices);
        if (!check_labeling(d, lab).proper) return;
        ++proper_seen;
        const auto chain = find_alternating_chain(d, lab);
        REQUIRE(chain.has_value());
        REQUIRE(static_cast<int>(chain->vectors.size()) == d.n());
        for (std::size_t i = 0; i < chain->vectors.size(); ++i) {
            CHECK(chain->vectors[i].support_size() == static_cast<int>(i) + 1);
            CHECK(chain->labels[i] == lab.labels[d.index_of(chain->vectors[i])]);
            if (i > 0) CHECK(dominated_by(chain->vectors[i - 1], chain->vectors[i]));
        }
        auto sorted = chain->labels;
        std::sort(sorted.begin(), sorted.end(),
                  [](const FanLabel& a, const FanLabel& b) { return a.abs < b.abs; });
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            CHECK(sorted[i].abs != sorted[i - 1].abs);
            CHECK(sorted[i].sign != sorted[i - 1].sign);
        }
    });
    CHECK(proper_seen == 80);
}

TEST_CASE("chain finder agrees with the naive enumerator") {
    for (const auto [q, n, m] : {std::tuple{2, 2, 2}, std::tuple{3, 2, 2}, std::tuple{2, 2, 3}}) {
        const SdDomain d(q, n);
        for_each_choice(q, m, d.orbit_count(), [&](const std::vector<FanLabel>& choices) {
            const auto lab = Labeling::from_orbit_choices(d, m, choices);
            if (!check_labeling(d, lab).proper) return;
            CHECK(find_alternating_chain(d, lab).has_value() == naive_has_chain(d, lab));
        });
    }
    // Sampled slice of the next size up; full enumeration is 6^13.
    const SdDomain d(2, 3);
    std::mt19937_64 rng(83);
    int proper_seen = 0;
    while (proper_seen < 40) {
        std::vector<FanLabel> choices;
        for (std::int64_t i = 0; i < d.orbit_count(); ++i)
            choices.push_back(FanLabel{1 + static_cast<int>(rng() % 2),
                                       1 + static_cast<int>(rng() % 3)});
        const auto lab = Labeling::from_orbit_choices(d, 3, choices);
        if (!check_labeling(d, lab).proper) continue;
        ++proper_seen;
        CHECK(find_alternating_chain(d, lab).has_value() == naive_has_chain(d, lab));
    }
}

TEST_CASE("exhaustive counts at tiny sizes") {
    const auto r222 = exhaustive_fan_check(2, 2, 2);
    CHECK(r222.vertices == 8);
    CHECK(r222.orbits == 4);
    CHECK(r222.total_labelings == 256);
    CHECK(r222.enumerated == 256);
    CHECK(r222.proper == 80);
    CHECK(r222.with_chain == 80);
    CHECK(r222.violations == 0);
    CHECK(r222.exhaustive);
    CHECK_FALSE(r222.counterexample.has_value());

    const auto r223 = exhaustive_fan_check(2, 2, 3);
    CHECK(r223.enumerated == 1296);
    CHECK(r223.proper == 624);
    CHECK(r223.violations == 0);

    const auto r322 = exhaustive_fan_check(3, 2, 2);
    CHECK(r322.enumerated == 7776);
    CHECK(r322.proper == 792);
    CHECK(r322.violations == 0);
}

TEST_CASE("too few absolute values leaves nothing proper") {
    const auto r = exhaustive_fan_check(2, 2, 1);
    CHECK(r.enumerated == 16);
    CHECK(r.proper == 0);
    CHECK(r.violations == 0);
}

TEST_CASE("worker count never changes the outcome") {
    const auto base = exhaustive_fan_check(2, 2, 3);
    for (int workers : {2, 4}) {
        FanOptions opt;
        opt.workers = workers;
        const auto r = exhaustive_fan_check(2, 2, 3, opt);
        CHECK(r.enumerated == base.enumerated);
        CHECK(r.proper == base.proper);
        CHECK(r.with_chain == base.with_chain);
        CHECK(r.violations == base.violations);
    }
}

TEST_CASE("cap, sampling, and guard rails") {
    FanOptions no_samples;
    no_samples.enumeration_cap = 100;
    CHECK_THROWS_AS(exhaustive_fan_check(2, 2, 3, no_samples), ResourceLimitError);

    FanOptions sampling;
    sampling.enumeration_cap = 100;
    sampling.samples = 300;
    sampling.seed = 11;
    const auto a = exhaustive_fan_check(2, 2, 3, sampling);
    const auto b = exhaustive_fan_check(2, 2, 3, sampling);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.sampled == 300);
    CHECK(a.violations == 0);
    CHECK(a.proper == b.proper);
    CHECK(a.with_chain == b.with_chain);

    CHECK_THROWS_AS(exhaustive_fan_check(2, 2, 70), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_fan_check(2, 12, 2), ResourceLimitError);
    CHECK_THROWS_AS(exhaustive_fan_check(1, 2, 2), std::invalid_argument);
}
