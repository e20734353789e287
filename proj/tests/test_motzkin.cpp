#include <doctest.h>

#include "genocchi/dellac.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/motzkin.hpp"
#include "genocchi/qbinomial.hpp"
#include "genocchi/seidel.hpp"

#include <algorithm>

using namespace genocchi;

namespace {

// M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}
std::vector<BigInt> motzkin_numbers(int upto) {
    std::vector<BigInt> m{1, 1};
    for (int n = 2; n <= upto; ++n) {
        BigInt v = m[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k <= n - 2; ++k) {
            v += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)];
        }
        m.push_back(v);
    }
    return m;
}

std::vector<MotzkinPath> paths(int n) {
    std::vector<MotzkinPath> out;
    enumerate_motzkin(n, [&](const MotzkinPath& f) { out.push_back(f); });
    return out;
}

WeightSystem<BigInt> unit_weights() {
    auto one = [](int) { return BigInt(1); };
    return {one, one, one};
}

} // namespace

TEST_CASE("path enumeration") {
    CHECK(enumerate_motzkin(0, {}) == 1);
    const auto three = paths(3);
    CHECK(three == std::vector<MotzkinPath>{{{0, 0, 0, 0}}, {{0, 0, 1, 0}}, {{0, 1, 0, 0}}, {{0, 1, 1, 0}}});
    const auto m = motzkin_numbers(14);
    for (int n = 0; n <= 12; ++n) {
        CHECK(enumerate_motzkin(n, {}) == m[static_cast<std::size_t>(n)]);
    }
    CHECK(enumerate_motzkin(5, {}) == 21);
    CHECK_THROWS_AS(enumerate_motzkin(-1, {}), DomainError);
    CHECK_THROWS_AS(enumerate_motzkin(15, {}), ResourceLimit);
}

TEST_CASE("paths stay Motzkin and come out in fall < level < rise order") {
    for (int n = 0; n <= 9; ++n) {
        const auto all = paths(n);
        // fall < level < rise at the first difference is lexicographic order of heights
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& f : all) {
            CHECK(f.heights.front() == 0);
            CHECK(f.heights.back() == 0);
            for (std::size_t k = 0; k + 1 < f.heights.size(); ++k) {
                CHECK(std::abs(f.heights[k + 1] - f.heights[k]) <= 1);
                CHECK(f.heights[k] <= static_cast<int>(k));
                CHECK(f.heights[k] <= n - static_cast<int>(k));
            }
            CHECK(rises_plus_falls(f) % 2 == 0);
        }
    }
}

TEST_CASE("weighted path sums") {
    const auto m = motzkin_numbers(20);
    for (int n = 0; n <= 20; ++n) {
        CHECK(weighted_path_sum(n, unit_weights()) == m[static_cast<std::size_t>(n)]);
    }
    CHECK(weighted_path_sum(2, integer_weights()) == 2);
    CHECK(weighted_path_sum(0, integer_weights()) == 1);
    // transfer matrix against explicit enumeration
    for (int n = 0; n <= 10; ++n) {
        BigInt total = 0;
        enumerate_motzkin(n, [&](const MotzkinPath& f) { total += path_weight(f, integer_weights()); });
        CHECK(total == weighted_path_sum(n, integer_weights()));
    }
}

TEST_CASE("rational path sum") {
    const auto three = paths(3);
    std::vector<Rational> terms;
    for (const auto& f : three) {
        terms.push_back(rational_term(f));
    }
    // (0,0,0,0) (0,0,1,0) (0,1,0,0) (0,1,1,0)
    CHECK(terms == std::vector<Rational>{1, 1, 1, 4});
    CHECK(h_motzkin_rational(3) == 7);
    CHECK(h_motzkin_rational(1) == 1);
    CHECK(h_motzkin_rational(5) == 295);
}

TEST_CASE("q = 1 weights agree with the rational formula path by path") {
    for (int n = 0; n <= 8; ++n) {
        enumerate_motzkin(n, [&](const MotzkinPath& f) {
            CHECK(Rational(path_weight(f, integer_weights())) == rational_term(f));
        });
    }
}

TEST_CASE("fermionic exponents") {
    for (int n = 0; n <= 10; ++n) {
        enumerate_motzkin(n, [&](const MotzkinPath& f) {
            CHECK(fermionic_exponent(f) >= 0);
            CHECK(fermionic_exponent(f) == regrouped_exponent(f));
        });
    }
}

TEST_CASE("q_binomial_or_zero outside the triangle") {
    CHECK(q_binomial_or_zero(1, 2).is_zero());
    CHECK(q_binomial_or_zero(-1, 0).is_zero());
    CHECK(q_binomial_or_zero(3, 1) == IntPoly{1, 1, 1});
}

TEST_CASE("fermionic polynomial") {
    CHECK(h_poly_fermionic(1) == IntPoly{1});
    CHECK(h_poly_fermionic(2) == IntPoly{1, 1});
    CHECK(h_poly_fermionic(3) == IntPoly{1, 2, 3, 1});
    CHECK(h_poly_fermionic(4) == IntPoly{1, 3, 7, 10, 10, 6, 1});
    CHECK(h_poly_fermionic(6) ==
          IntPoly{1, 5, 18, 47, 103, 189, 301, 414, 495, 508, 441, 315, 175, 70, 15, 1});
    for (int n = 1; n <= 9; ++n) {
        IntPoly by_paths;
        enumerate_motzkin(n, [&](const MotzkinPath& f) { by_paths += fermionic_term(f); });
        CHECK(by_paths == h_poly_fermionic(n));
    }
    for (int n = 1; n <= 7; ++n) {
        CHECK(h_poly_fermionic(n) == h_poly_dellac(n));
    }
}

TEST_CASE("Laurent-weight path sum") {
    CHECK(h_poly_laurent(1) == IntPoly{1});
    CHECK(h_poly_laurent(2) == IntPoly{1, 1});
    CHECK(h_poly_laurent(4) == IntPoly{1, 3, 7, 10, 10, 6, 1});
    for (int n = 1; n <= 12; ++n) {
        CHECK(h_poly_laurent(n) == h_poly_fermionic(n));
        CHECK(h_poly_fermionic(n).eval(1) == normalized_h(static_cast<std::size_t>(n)));
    }
    // gamma_m(q) = [m+1,1]_{1/q}^2 and alpha_m beta_m = q^{-1} [m+2,2]_{1/q}^2
    const auto ws = laurent_weights();
    for (int m = 0; m <= 6; ++m) {
        const auto d1 = static_cast<std::size_t>(m);
        const auto d2 = static_cast<std::size_t>(2 * m);
        CHECK(ws.gamma(m) == LaurentPoly(poly_reverse(q_binomial(d1 + 1, 1).pow(2), d2), -2L * m));
        CHECK(ws.alpha(m) * ws.beta(m) ==
              LaurentPoly(poly_reverse(q_binomial(d1 + 2, 2).pow(2), 2 * d2), -4L * m - 1));
    }
}

TEST_CASE("tilde_h") {
    CHECK(tilde_h(0) == IntPoly{1});
    CHECK(tilde_h(2) == IntPoly{1, 1});
    CHECK(tilde_h(3) == IntPoly{1, 3, 2, 1});
    CHECK(tilde_h(5) == IntPoly{1, 10, 30, 50, 62, 57, 43, 25, 12, 4, 1});
}
