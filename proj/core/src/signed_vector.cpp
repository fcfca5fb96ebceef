#include "klab/signed_vector.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace klab {

namespace {

void require_permutation(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("permutation length does not match vector length");
    std::vector<char> seen(n + 1, 0);
    for (int v : pi) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range");
        if (seen[v] != 0) throw std::invalid_argument("permutation repeats an entry");
        seen[v] = 1;
    }
}

} // namespace

int alternation_length(const SignedVector& x, const std::vector<int>& pi) {
    require_permutation(pi, x.length());
    int runs = 0;
    int prev = 0;
    for (int pos : pi) {
        const int v = x.entries[pos - 1];
        if (v == 0) continue;
        if (v != prev) ++runs;
        prev = v;
    }
    return runs;
}

std::vector<int> identity_permutation(int n) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    return pi;
}

} // namespace klab
