#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace klab {

/// Length-n vector over Z_q extended by a zero symbol. Entry 0 is the zero
/// symbol; entry j in 1..q encodes the group element of exponent j, with
/// multiplication acting as exponent addition mod q mapped back into 1..q.
struct SignedVector {
    int q = 2;
    std::vector<std::uint8_t> entries;

    SignedVector() = default;
    SignedVector(int modulus, std::vector<std::uint8_t> e) : q(modulus), entries(std::move(e)) {
        if (q < 2) throw std::invalid_argument("modulus must be at least 2");
        for (auto v : entries)
            if (v > q) throw std::invalid_argument("entry exceeds modulus");
    }

    int length() const { return static_cast<int>(entries.size()); }

    int support_size() const {
        int s = 0;
        for (auto v : entries) s += v != 0;
        return s;
    }

    bool is_zero() const { return support_size() == 0; }

    /// Positions (1-based) carrying symbol j.
    std::vector<int> symbol_class(int j) const {
        std::vector<int> out;
        for (int i = 0; i < length(); ++i)
            if (entries[i] == j) out.push_back(i + 1);
        return out;
    }

    bool operator==(const SignedVector& other) const = default;
};

/// Multiplies every nonzero entry by the group element of exponent a.
inline SignedVector rotate(const SignedVector& x, int a) {
    SignedVector y = x;
    const int shift = ((a % y.q) + y.q) % y.q;
    for (auto& v : y.entries)
        if (v != 0) v = static_cast<std::uint8_t>(1 + (v - 1 + shift) % y.q);
    return y;
}

/// x dominated by y: every nonzero entry of x agrees with y.
inline bool dominated_by(const SignedVector& x, const SignedVector& y) {
    if (x.q != y.q || x.length() != y.length())
        throw std::invalid_argument("vectors have mismatched shape");
    for (int i = 0; i < x.length(); ++i)
        if (x.entries[i] != 0 && x.entries[i] != y.entries[i]) return false;
    return true;
}

inline bool is_comparable(const SignedVector& x, const SignedVector& y) {
    return dominated_by(x, y) || dominated_by(y, x);
}

/// Longest subsequence of x read in pi order whose elements are nonzero and
/// consecutive elements distinct. pi lists positions: step i reads entry
/// pi[i-1]. Equal to the number of maximal constant runs after dropping
/// zeros, which a single scan counts; optimality holds because any
/// alternating subsequence picks at most one element per run.
int alternation_length(const SignedVector& x, const std::vector<int>& pi);

/// The identity permutation 1..n.
std::vector<int> identity_permutation(int n);

} // namespace klab
