#pragma once

#include "genocchi/int_poly.hpp"
#include "genocchi/laurent_poly.hpp"
#include "genocchi/limits.hpp"
#include "genocchi/errors.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace genocchi {

/// Heights f_0, ..., f_n with f_0 = f_n = 0, steps in {-1, 0, +1}, f_k >= 0.
struct MotzkinPath {
    std::vector<int> heights;

    int length() const noexcept { return static_cast<int>(heights.size()) - 1; }
    friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;
};

using MotzkinVisitor = std::function<void(const MotzkinPath&)>;

/// Visits every path of length n once; at each step a fall is tried before a
/// level step, and a level step before a rise. Returns the number of paths.
BigInt enumerate_motzkin(int n, const MotzkinVisitor& visit);

/// Number of rises plus number of falls.
int rises_plus_falls(const MotzkinPath& f);

/// Step weights of a weighted Motzkin path: w(k, k) = gamma(k),
/// w(k, k+1) = alpha(k), w(k, k-1) = beta(k-1). All three return the same
/// exact coefficient type.
template <typename T>
struct WeightSystem {
    std::function<T(int)> alpha;
    std::function<T(int)> beta;
    std::function<T(int)> gamma;

    T step(int from, int to) const {
        if (to == from + 1) {
            return alpha(from);
        }
        if (to == from) {
            return gamma(from);
        }
        if (to == from - 1 && from >= 1) {
            return beta(to);
        }
        throw DomainError("not a Motzkin step: " + std::to_string(from) + " -> " +
                          std::to_string(to));
    }
};

template <typename T>
T path_weight(const MotzkinPath& f, const WeightSystem<T>& ws) {
    T acc(1);
    for (std::size_t k = 0; k + 1 < f.heights.size(); ++k) {
        acc = acc * ws.step(f.heights[k], f.heights[k + 1]);
    }
    return acc;
}

/// Sum over all Motzkin paths of length n of the product of step weights,
/// by transfer matrix over heights. Each weight is evaluated once per call.
template <typename T>
T weighted_path_sum(int n, const WeightSystem<T>& ws) {
    if (n < 0) {
        throw DomainError("weighted_path_sum: n must be nonnegative");
    }
    require_within_limit(Model::PathSum, n);
    const int top = n / 2;
    std::vector<T> alpha, beta, gamma;
    for (int m = 0; m <= top; ++m) {
        gamma.push_back(ws.gamma(m));
        if (m < top) {
            alpha.push_back(ws.alpha(m));
            beta.push_back(ws.beta(m));
        }
    }
    std::vector<T> cur{T(1)};
    for (int k = 0; k < n; ++k) {
        // heights reachable at k+1 that can still return to 0 by n
        const int reach = std::min(k + 1, n - k - 1);
        std::vector<T> next(static_cast<std::size_t>(reach + 1));
        for (int a = 0; a < static_cast<int>(cur.size()); ++a) {
            const T& here = cur[static_cast<std::size_t>(a)];
            if (a <= reach) {
                next[static_cast<std::size_t>(a)] += here * gamma[static_cast<std::size_t>(a)];
            }
            if (a + 1 <= reach) {
                next[static_cast<std::size_t>(a + 1)] += here * alpha[static_cast<std::size_t>(a)];
            }
            if (a >= 1 && a - 1 <= reach) {
                next[static_cast<std::size_t>(a - 1)] += here * beta[static_cast<std::size_t>(a - 1)];
            }
        }
        cur = std::move(next);
    }
    return cur[0];
}

/// q = 1 weights: alpha_m = beta_m = (m+1)(m+2)/2, gamma_m = (m+1)^2.
WeightSystem<BigInt> integer_weights();

/// alpha_m = q^{-3m} [m+2, 2], beta_m = q^{-m-1} [m+2, 2],
/// gamma_m = q^{-2m} [m+1, 1]^2.
WeightSystem<LaurentPoly> laurent_weights();

/// prod_{k=0}^{n} (1 + f_k)^2 / 2^{rises + falls}
Rational rational_term(const MotzkinPath& f);

/// sum of rational_term over all paths of length n; InternalInconsistency
/// unless the total is an integer.
BigInt h_motzkin_rational(int n);

/// [m, n]_q, or zero when n > m or either index is negative.
IntPoly q_binomial_or_zero(long m, long n);

/// sum_{k=1}^{n-1} (k - f_k)(1 - f_k + f_{k+1})
long fermionic_exponent(const MotzkinPath& f);

/// n(n-1)/2 + sum_{k=1}^{n-1} f_k (f_k - f_{k+1} - 2)
long regrouped_exponent(const MotzkinPath& f);

/// q^{fermionic_exponent} prod_{k=1}^{n-1} [1+f_{k-1}, f_k] [1+f_{k+1}, f_k]
IntPoly fermionic_term(const MotzkinPath& f);

/// The fermionic sum over paths of length n, as a transfer matrix whose step
/// factors depend on the position k.
IntPoly h_poly_fermionic(int n);

/// q^{n(n-1)/2} times the laurent_weights path sum.
IntPoly h_poly_laurent(int n);

/// q^{n(n-1)/2} h_n(1/q); tilde_h(0) = 1.
IntPoly tilde_h(int n);

std::string to_text(const MotzkinPath& f);
nlohmann::json to_json(const MotzkinPath& f);

} // namespace genocchi
