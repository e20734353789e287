#pragma once

#include "genocchi/int_poly.hpp"

namespace genocchi {

/// [n]_q = 1 + q + ... + q^(n-1)
IntPoly q_integer(std::size_t n);

/// [1]_q [2]_q ... [n]_q
IntPoly q_factorial(std::size_t n);

/// Gaussian binomial [m choose n]_q, by the memoized Pascal recurrence
///   [m, n] = [m-1, n-1] + q^n [m-1, n].
/// DomainError when n > m. The memo is shared and mutex-guarded.
IntPoly q_binomial(std::size_t m, std::size_t n);

/// Ordinary binomial coefficient, used as the q = 1 reference.
BigInt binomial(std::size_t m, std::size_t n);

} // namespace genocchi
