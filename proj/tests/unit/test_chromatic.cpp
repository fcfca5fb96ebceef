#include <random>

#include "doctest.h"

#include "../support/oracles.hpp"
#include "klab/chromatic.hpp"
#include "klab/kneser_graph.hpp"

using namespace klab;

namespace {

Hypergraph triangle() { return Hypergraph::from_edge_lists(3, {{1, 2}, {2, 3}, {1, 3}}); }

std::int64_t factorial_falling(int t, int u) {
    std::int64_t out = 1;
    for (int i = 0; i < u; ++i) out *= t - i;
    return out;
}

} // namespace

TEST_CASE("find_t_coloring basics") {
    CHECK_FALSE(find_t_coloring(triangle(), 2).has_value());
    const auto c = find_t_coloring(triangle(), 3);
    REQUIRE(c.has_value());
    CHECK(is_proper(triangle(), *c));
    CHECK_FALSE(find_t_coloring(Hypergraph::from_edge_lists(1, {{1}}), 5).has_value());
    // A 3-uniform edge needs only two colors.
    const auto h = Hypergraph::from_edge_lists(3, {{1, 2, 3}});
    CHECK(find_t_coloring(h, 2).has_value());
}

TEST_CASE("chromatic number closed cases") {
    CHECK(chromatic_number(Hypergraph()).value == 0);
    const auto edgeless = Hypergraph::from_edge_lists(4, {});
    CHECK(chromatic_number(edgeless).value == 1);
    CHECK(chromatic_number(triangle()).value == 3);

    const auto singleton = Hypergraph::from_edge_lists(3, {{1, 2}, {3}});
    const auto r = chromatic_number(singleton);
    CHECK(r.status == ChromaticResult::Status::unbounded);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("agrees with the brute force oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto h = testing::random_hypergraph(rng, 7, 9);
        const auto r = chromatic_number(h);
        const int expect = testing::oracle_chromatic(h);
        if (expect < 0) {
            CHECK(r.status == ChromaticResult::Status::unbounded);
        } else {
            REQUIRE(r.exact());
            CHECK(r.value == expect);
            REQUIRE(r.witness.has_value());
            CHECK(is_proper(h, *r.witness));
            CHECK(r.witness->used_colors() == expect);
        }
    }
}

TEST_CASE("witness is the lexicographically least optimal coloring") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const auto h = testing::random_hypergraph(rng, 6, 7);
        const auto r = chromatic_number(h);
        if (!r.exact() || r.value == 0) continue;
        std::optional<Coloring> least;
        enumerate_proper_colorings(h, r.value, false, [&](const Coloring& c) {
            least = c; // lexicographic stream: the first hit is the least
            return false;
        });
        REQUIRE(least.has_value());
        CHECK(r.witness->colors == least->colors);
    }
}

TEST_CASE("kneser chromatic values") {
    const auto petersen = build_kneser(complete_ksubsets(5, 2), 2).kg;
    CHECK(chromatic_number(petersen).value == 3);
    const auto k42 = build_kneser(complete_ksubsets(4, 2), 2).kg;
    CHECK(chromatic_number(k42).value == 2);
}

TEST_CASE("timeout yields flagged partial result with certified bounds") {
    const auto kg = build_kneser(complete_ksubsets(10, 2), 2).kg;
    const auto r = chromatic_number(kg, SearchBudget{1});
    REQUIRE(r.status == ChromaticResult::Status::timed_out);
    CHECK(r.lower_bound >= 1);
    CHECK(r.upper_bound >= r.lower_bound);
    REQUIRE(r.witness.has_value());
    CHECK(is_proper(kg, *r.witness));
    CHECK(r.witness->used_colors() <= r.upper_bound);

    bool timed_out = false;
    const auto c = find_t_coloring(kg, 7, SearchBudget{1}, &timed_out);
    if (!c.has_value()) CHECK(timed_out);
}

TEST_CASE("enumeration streams all proper colorings in lex order") {
    const auto h = triangle();
    std::vector<Coloring> seen;
    enumerate_proper_colorings(h, 3, false, [&](const Coloring& c) {
        seen.push_back(c);
        return true;
    });
    CHECK(seen.size() == 6); // 3! rainbow colorings of a triangle
    for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1].colors < seen[i].colors);
    for (const auto& c : seen) CHECK(is_proper(h, c));
}

TEST_CASE("canonical stream is one representative per color-permutation orbit") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        const auto h = testing::random_hypergraph(rng, 7, 8);
        for (int t = 2; t <= 3; ++t) {
            std::int64_t all = 0;
            enumerate_proper_colorings(h, t, false, [&](const Coloring&) {
                ++all;
                return true;
            });
            std::int64_t expanded = 0;
            enumerate_proper_colorings(h, t, true, [&](const Coloring& c) {
                // Canonical witness: colors appear as 1,2,... in first-use order.
                int next = 1;
                for (int color : c.colors) {
                    CHECK(color <= next);
                    if (color == next) ++next;
                }
                expanded += factorial_falling(t, c.used_colors());
                return true;
            });
            CHECK(all == expanded);
        }
    }
}

TEST_CASE("enumeration stop semantics") {
    int count = 0;
    const bool completed = enumerate_proper_colorings(triangle(), 3, false, [&](const Coloring&) {
        return ++count < 2;
    });
    CHECK_FALSE(completed);
    CHECK(count == 2);
    CHECK(enumerate_proper_colorings(triangle(), 2, false, [](const Coloring&) { return true; }));
}

TEST_CASE("random proper colorings are proper and seed-deterministic") {
    const auto h = build_kneser(complete_ksubsets(5, 2), 2).kg;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto a = random_proper_coloring(h, 4, seed);
        const auto b = random_proper_coloring(h, 4, seed);
        REQUIRE(a.has_value());
        CHECK(is_proper(h, *a));
        CHECK(a->colors == b->colors);
    }
    CHECK_FALSE(random_proper_coloring(triangle(), 2, 1).has_value());
}
