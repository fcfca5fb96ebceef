#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace klab {

/// Dense subset of the vertex range 1..n. Vertices are 1-based everywhere in
/// the public surface; word layout is an implementation detail.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {
        assert(capacity >= 0);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int v = 1; v <= capacity; ++v) s.add(v);
        return s;
    }

    static VertexSet of(int capacity, std::initializer_list<int> elems) {
        VertexSet s(capacity);
        for (int v : elems) s.add(v);
        return s;
    }

    static VertexSet of(int capacity, const std::vector<int>& elems) {
        VertexSet s(capacity);
        for (int v : elems) s.add(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool contains(int v) const {
        assert(v >= 1 && v <= capacity_);
        return (words_[word(v)] >> bit(v)) & 1u;
    }

    void add(int v) {
        assert(v >= 1 && v <= capacity_);
        words_[word(v)] |= std::uint64_t{1} << bit(v);
    }

    void remove(int v) {
        assert(v >= 1 && v <= capacity_);
        words_[word(v)] &= ~(std::uint64_t{1} << bit(v));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within 1..capacity.
    VertexSet complement() const {
        VertexSet r(capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    /// Elements in ascending order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i) * 64 + b + 1);
                w &= w - 1;
            }
        }
        return out;
    }

    /// Smallest element, or 0 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i) * 64 + std::countr_zero(words_[i]) + 1;
        return 0;
    }

    bool operator==(const VertexSet& o) const {
        return capacity_ == o.capacity_ && words_ == o.words_;
    }

    /// Deterministic total order (capacity, then word content); used for
    /// canonical sorting of edge families in reports.
    bool operator<(const VertexSet& o) const {
        if (capacity_ != o.capacity_) return capacity_ < o.capacity_;
        return words_ < o.words_;
    }

    struct Hash {
        std::size_t operator()(const VertexSet& s) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::uint64_t w : s.words_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.capacity_));
        }
    };

private:
    static std::size_t word(int v) { return static_cast<std::size_t>(v - 1) / 64; }
    static int bit(int v) { return (v - 1) % 64; }

    void trim() {
        if (capacity_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
    }

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace klab
