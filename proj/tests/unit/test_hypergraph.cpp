#include <random>
#include <stdexcept>

#include "doctest.h"

#include "../support/oracles.hpp"
#include "klab/hypergraph.hpp"

using namespace klab;

namespace {

Hypergraph triangle() { return Hypergraph::from_edge_lists(3, {{1, 2}, {2, 3}, {1, 3}}); }

} // namespace

TEST_CASE("construction validates edges") {
    CHECK_THROWS_AS(Hypergraph(2, {VertexSet(2)}), std::invalid_argument); // empty edge
    CHECK_THROWS_AS(Hypergraph::from_edge_lists(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph::from_edge_lists(3, {{0, 1}}), std::invalid_argument);
    CHECK_NOTHROW(Hypergraph::from_edge_lists(0, {}));
}

TEST_CASE("duplicate edges are dropped keeping first occurrence order") {
    const auto h = Hypergraph::from_edge_lists(4, {{1, 2}, {3, 4}, {2, 1}, {1, 3}});
    CHECK(h.edge_count() == 3);
    CHECK(h.edge(0).elements() == std::vector<int>{1, 2});
    CHECK(h.edge(1).elements() == std::vector<int>{3, 4});
    CHECK(h.edge(2).elements() == std::vector<int>{1, 3});
}

TEST_CASE("degrees and incidence") {
    const auto h = triangle();
    CHECK(h.degrees() == std::vector<int>{2, 2, 2});
    const auto inc = h.incidence();
    CHECK(inc[0] == std::vector<int>{0, 2});
    CHECK(inc[1] == std::vector<int>{0, 1});
    CHECK(inc[2] == std::vector<int>{1, 2});
    CHECK_FALSE(h.has_singleton_edge());
    CHECK(Hypergraph::from_edge_lists(2, {{2}}).has_singleton_edge());
}

TEST_CASE("coloring helpers") {
    const Coloring c{3, {1, 2, 2, 3}};
    CHECK(c.color_of(1) == 1);
    CHECK(c.color_of(3) == 2);
    CHECK(c.used_colors() == 3);
    CHECK(Coloring{5, {2, 2}}.used_colors() == 1);
    CHECK_NOTHROW(validate_coloring(c, 4));
    CHECK_THROWS_AS(validate_coloring(c, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_coloring(Coloring{2, {1, 3}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(validate_coloring(Coloring{2, {0, 1}}, 2), std::invalid_argument);
}

TEST_CASE("properness") {
    const auto h = triangle();
    CHECK(is_proper(h, Coloring{3, {1, 2, 3}}));
    CHECK_FALSE(is_proper(h, Coloring{2, {1, 2, 1}})); // edge {1,3} is monochromatic
    CHECK_FALSE(is_proper(h, Coloring{2, {1, 1, 2}}));

    const auto path = Hypergraph::from_edge_lists(3, {{1, 2}, {2, 3}});
    CHECK(is_proper(path, Coloring{2, {1, 2, 1}}));
    CHECK_THROWS_AS(is_proper(h, Coloring{2, {1, 2}}), std::invalid_argument);

    const auto single = Hypergraph::from_edge_lists(2, {{1}});
    CHECK_FALSE(is_proper(single, Coloring{2, {1, 2}})); // singleton always mono
}

TEST_CASE("induced subhypergraph") {
    const auto h = Hypergraph::from_edge_lists(5, {{1, 2}, {2, 3, 4}, {4, 5}, {3, 5}});
    const auto sub = induced(h, VertexSet::of(5, {2, 3, 4}));
    CHECK(sub.hypergraph.vertex_count() == 3);
    CHECK(sub.original_ids == std::vector<int>{2, 3, 4});
    REQUIRE(sub.hypergraph.edge_count() == 1);
    CHECK(sub.hypergraph.edge(0).elements() == std::vector<int>{1, 2, 3}); // was {2,3,4}

    // Inducing on everything is the identity.
    const auto all = induced(h, VertexSet::full(5));
    CHECK(all.hypergraph == h);

    // Inducing twice on the image of a restriction equals inducing once.
    const auto again = induced(sub.hypergraph, VertexSet::full(3));
    CHECK(again.hypergraph == sub.hypergraph);
}

TEST_CASE("neighborhood closure") {
    // Closure adds exactly the vertices that are the sole remainder of an edge.
    const auto h = Hypergraph::from_edge_lists(5, {{1, 2}, {2, 3, 4}, {4, 5}});
    const auto cl = neighborhood_closure(h, VertexSet::of(5, {2, 3}));
    CHECK(cl.elements() == std::vector<int>{1, 2, 3, 4}); // {1,2}\x={1}, {2,3,4}\x={4}
    CHECK_FALSE(cl.contains(5)); // {4,5} keeps two vertices outside x

    const auto small = neighborhood_closure(h, VertexSet::of(5, {2}));
    CHECK(small.elements() == std::vector<int>{1, 2}); // only {1,2} shrinks to one vertex
}

TEST_CASE("closure is monotone and extensive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = klab::testing::random_hypergraph(rng, 7, 8);
        VertexSet x(7);
        VertexSet y(7);
        for (int v = 1; v <= 7; ++v) {
            const auto roll = rng() % 4;
            if (roll == 0) x.add(v);
            if (roll <= 1) y.add(v); // x subset of y by construction below
        }
        y |= x;
        const auto cx = neighborhood_closure(h, x);
        const auto cy = neighborhood_closure(h, y);
        CHECK(x.subset_of(cx));
        CHECK(cx.subset_of(cy));
    }
}
