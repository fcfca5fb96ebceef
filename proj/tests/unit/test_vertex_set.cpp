#include <unordered_set>

#include "doctest.h"

#include "klab/vertex_set.hpp"

using klab::VertexSet;

TEST_CASE("membership and mutation") {
    VertexSet s(10);
    CHECK(s.empty());
    CHECK(s.size() == 0);
    s.add(3);
    s.add(10);
    s.add(1);
    CHECK(s.contains(1));
    CHECK(s.contains(3));
    CHECK(s.contains(10));
    CHECK_FALSE(s.contains(2));
    CHECK(s.size() == 3);
    s.remove(3);
    CHECK_FALSE(s.contains(3));
    CHECK(s.size() == 2);
    s.add(1); // re-adding is a no-op
    CHECK(s.size() == 2);
}

TEST_CASE("factories") {
    const VertexSet f = VertexSet::full(5);
    CHECK(f.size() == 5);
    CHECK(f.elements() == std::vector<int>{1, 2, 3, 4, 5});

    const VertexSet a = VertexSet::of(6, {2, 4, 6});
    CHECK(a.elements() == std::vector<int>{2, 4, 6});
    const VertexSet b = VertexSet::of(6, std::vector<int>{6, 2, 4});
    CHECK(a == b);
}

TEST_CASE("set algebra") {
    const VertexSet a = VertexSet::of(8, {1, 2, 3});
    const VertexSet b = VertexSet::of(8, {3, 4});
    CHECK((a | b).elements() == std::vector<int>{1, 2, 3, 4});
    CHECK((a & b).elements() == std::vector<int>{3});
    CHECK((a - b).elements() == std::vector<int>{1, 2});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of(8, {5, 6})));
    CHECK(VertexSet::of(8, {2, 3}).subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(VertexSet(8).subset_of(b)); // empty set is a subset of anything
}

TEST_CASE("complement stays inside the capacity") {
    const VertexSet a = VertexSet::of(70, {1, 70});
    const VertexSet c = a.complement();
    CHECK(c.size() == 68);
    CHECK_FALSE(c.contains(1));
    CHECK_FALSE(c.contains(70));
    CHECK(c.contains(2));
    CHECK((a | c) == VertexSet::full(70));
}

TEST_CASE("first element and ordering") {
    CHECK(VertexSet(4).first() == 0);
    CHECK(VertexSet::of(100, {64, 65}).first() == 64);

    const VertexSet a = VertexSet::of(5, {1});
    const VertexSet b = VertexSet::of(5, {2});
    CHECK(a < b);
    CHECK_FALSE(b < a);
}

TEST_CASE("hashable in unordered containers") {
    std::unordered_set<VertexSet, VertexSet::Hash> pool;
    pool.insert(VertexSet::of(9, {1, 5}));
    pool.insert(VertexSet::of(9, {5, 1}));
    pool.insert(VertexSet::of(9, {2}));
    CHECK(pool.size() == 2);
    CHECK(pool.count(VertexSet::of(9, {1, 5})) == 1);
}

TEST_CASE("multi word sets") {
    VertexSet s(130);
    s.add(1);
    s.add(64);
    s.add(65);
    s.add(128);
    s.add(130);
    CHECK(s.size() == 5);
    CHECK(s.elements() == std::vector<int>{1, 64, 65, 128, 130});
    CHECK(s.subset_of(VertexSet::full(130)));
}
