#pragma once

#include "genocchi/int_poly.hpp"

#include <vector>

namespace genocchi {

/// Seidel triangle g_{k,n}: column n = 1..N holds rows k = 1..floor((n+1)/2),
/// rows counted from the bottom. Filled from g_{1,1} = 1 by
///   g_{k,2n}   = sum_{i >= k} g_{i,2n-1}
///   g_{k,2n+1} = sum_{i <= k} g_{i,2n}
class SeidelTriangle {
public:
    explicit SeidelTriangle(std::size_t columns);

    std::size_t columns() const noexcept { return columns_.size(); }
    /// Column n, one-based; entry i is g_{i+1,n}.
    const std::vector<BigInt>& column(std::size_t n) const;
    const BigInt& entry(std::size_t k, std::size_t n) const;

    /// Rebuilds column n (n >= 2) from column n-1 by the recurrence.
    static std::vector<BigInt> next_column(const std::vector<BigInt>& prev, std::size_t n);

private:
    std::vector<std::vector<BigInt>> columns_;
};

/// Throws DomainError for N = 0.
SeidelTriangle build_triangle(std::size_t columns);

/// Genocchi number of the first kind g_{n,2n-1}.
BigInt genocchi_first(std::size_t n);
/// Median Genocchi number H_{2n-1} = g_{1,2n}.
BigInt median_genocchi(std::size_t n);
/// h_n = H_{2n+1} / 2^n; InternalInconsistency if the division is not exact.
BigInt normalized_h(std::size_t n);

} // namespace genocchi
