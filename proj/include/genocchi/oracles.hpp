#pragma once

#include "genocchi/int_poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace genocchi {

/// Two upper-triangular arrays r_{i,j}, m_{i,j} (1 <= i <= j <= n) of
/// nonnegative integers.
struct TrianglePair {
    int n = 0;
    std::map<std::pair<int, int>, int> r;
    std::map<std::pair<int, int>, int> m;
};

/// Row sums of r and column sums of m are at most 1, and for each k the
/// entries of r and m whose interval [i, j] contains k have equal totals.
bool is_valid_triangle_pair(const TrianglePair& t);

/// Permutations s of {1..2n+2} with s(k) < k for even k, s(k) > k for odd k
/// and s^{-1}(2k) < s^{-1}(2k+1) for k = 1..n. Brute force; n <= 4.
BigInt count_dumont(int n);

/// Exhaustive count of valid TrianglePair instances of size n; n <= 6.
BigInt count_triangle_pairs(int n);

} // namespace genocchi
