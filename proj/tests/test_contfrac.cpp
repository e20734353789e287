#include <doctest.h>

#include "genocchi/contfrac.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/motzkin.hpp"
#include "genocchi/qbinomial.hpp"
#include "genocchi/seidel.hpp"

#include <random>

using namespace genocchi;

namespace {

SFraction list_fraction(std::vector<IntPoly> c) {
    return SFraction{[c](int k) { return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : IntPoly{}; }};
}

std::vector<IntPoly> random_list(std::mt19937_64& rng, std::size_t len) {
    std::vector<IntPoly> c;
    for (std::size_t k = 0; k < len; ++k) {
        c.emplace_back(BigInt(rng() % 5 + 1));
    }
    return c;
}

} // namespace

TEST_CASE("geometric series from a J-fraction without lambda terms") {
    const JFraction j{IntPoly(1), [](int) { return IntPoly(3); }, [](int) { return IntPoly{}; }};
    const PowerSeries s = expand(j, 8);
    BigInt p = 1;
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(s[n] == IntPoly(p));
        p *= 3;
    }
}

TEST_CASE("named fractions") {
    const PowerSeries f1 = expand(f1_fraction(), 4);
    CHECK(f1[0] == IntPoly{1});
    CHECK(f1[1] == IntPoly{1});
    CHECK(f1[2] == IntPoly{1, 1});
    CHECK(f1[3] == IntPoly{1, 3, 2, 1});
    CHECK(f1[4] == poly_reverse(IntPoly{1, 3, 7, 10, 10, 6, 1}, 6));

    const PowerSeries v = expand(viennot_fraction(), 5);
    const std::vector<int> median{1, 1, 2, 8, 56, 608};
    for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(v[n] == IntPoly(median[n]));
    }

    // coefficient laws read off the displayed fractions
    const auto f2 = f2_fraction();
    CHECK(f2.c(0) == IntPoly{1});
    CHECK(f2.c(1) == IntPoly{1});
    CHECK(f2.c(2) == IntPoly{0, 1});
    CHECK(f2.c(3) == q_binomial(3, 2));
    CHECK(f2.c(4) == q_binomial(3, 2).shifted(1));
    CHECK(f2.c(5) == q_binomial(4, 2));
    const auto hn = hn_fraction();
    const std::vector<int> hn_c{1, 1, 1, 3, 3, 6, 6, 10};
    for (int k = 0; k < 8; ++k) {
        CHECK(hn.c(k) == IntPoly(hn_c[static_cast<std::size_t>(k)]));
    }
    const auto f1j = f1_fraction();
    CHECK(f1j.gamma(0) == IntPoly{1});
    CHECK(f1j.gamma(1) == IntPoly{1, 2, 1});
    CHECK(f1j.lambda(1) == IntPoly{0, 1});
    CHECK(f1j.lambda(2) == q_binomial(3, 2).pow(2).shifted(1));
    CHECK_THROWS_AS(named_fraction("nope"), DomainError);
}

TEST_CASE("depth stability") {
    for (const char* name : {"f1", "f2", "hn", "viennot"}) {
        const CFSpec spec = named_fraction(name);
        for (std::size_t order = 0; order <= 10; ++order) {
            const std::size_t d = sufficient_depth(spec, order);
            CHECK(expand_at_depth(spec, order, d) == expand_at_depth(spec, order, d + 3));
        }
    }
    const auto affine = contract_S_to_J_affine(viennot_fraction());
    for (std::size_t order = 0; order <= 10; ++order) {
        const std::size_t d = sufficient_depth(affine, order);
        CHECK(expand_at_depth(affine, order, d) == expand_at_depth(affine, order, d + 3));
    }
}

TEST_CASE("f2 contracts to f1") {
    const JFraction j = contract_S_to_J(f2_fraction());
    const JFraction f1 = f1_fraction();
    for (int k = 0; k <= 8; ++k) {
        CHECK(j.gamma(k) == f1.gamma(k));
        if (k >= 1) {
            CHECK(j.lambda(k) == f1.lambda(k));
        }
    }
    CHECK(j.gamma(1) == q_binomial(2, 1).pow(2));
    CHECK(expand(j, 8) == expand(f2_fraction(), 8));
    CHECK(tilde_h_series(4, TildeRoute::F1) == tilde_h_series(4, TildeRoute::F2));
}

TEST_CASE("Viennot affine contraction matches the displayed intermediate") {
    const auto a = contract_S_to_J_affine(viennot_fraction());
    CHECK(a.head == IntPoly{1});
    CHECK(a.linear == IntPoly{1});
    CHECK(a.gamma(1) == IntPoly(2));
    CHECK(a.lambda(1) == IntPoly(4));
    CHECK(a.gamma(2) == IntPoly(8));
    CHECK(a.lambda(2) == IntPoly(36));
    CHECK(expand(a, 10) == expand(viennot_fraction(), 10));
}

TEST_CASE("contractions of the zero sequence") {
    const auto zero = list_fraction({IntPoly(1)});
    CHECK(expand(contract_S_to_J(zero), 6) == PowerSeries::constant(IntPoly(1), 6));
    CHECK(expand(zero, 6) == PowerSeries::constant(IntPoly(1), 6));
    const auto c0_only = list_fraction({IntPoly(7)});
    CHECK(expand(contract_S_to_J_affine(c0_only), 6) == PowerSeries::constant(IntPoly(7), 6));
}

TEST_CASE("contractions on random coefficient sequences") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const auto s = list_fraction(random_list(rng, 13));
        CHECK(expand(s, 10) == expand(contract_S_to_J(s), 10));
        CHECK(expand(s, 10) == expand(contract_S_to_J_affine(s), 10));
    }
}

TEST_CASE("coefficients are weighted Motzkin path sums") {
    for (const char* name : {"f1", "f2", "hn", "viennot"}) {
        const CFSpec spec = named_fraction(name);
        const JFraction j = std::holds_alternative<JFraction>(spec) ? std::get<JFraction>(spec)
                                                                    : contract_S_to_J(std::get<SFraction>(spec));
        const PowerSeries s = expand(spec, 8);
        for (int n = 0; n <= 8; ++n) {
            CHECK(weighted_path_sum(n, path_weights(j)) * j.numerator == s[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("tilde_h series and q = 1 specializations") {
    CHECK(tilde_h_series(0, TildeRoute::F1).coeffs() == std::vector<IntPoly>{IntPoly(1)});
    const PowerSeries two = tilde_h_series(2, TildeRoute::F1);
    CHECK(two.coeffs() == std::vector<IntPoly>{IntPoly(1), IntPoly(1), IntPoly{1, 1}});
    for (auto via : {TildeRoute::F1, TildeRoute::F2}) {
        const PowerSeries s = tilde_h_series(6, via);
        for (int n = 0; n <= 6; ++n) {
            CHECK(s[static_cast<std::size_t>(n)] == tilde_h(n));
        }
    }
    const PowerSeries at1 = expand(f1_fraction(), 8).at_q(1);
    const PowerSeries hn = expand(hn_fraction(), 8);
    CHECK(at1 == hn);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(hn[n] == IntPoly(normalized_h(n)));
    }
    const PowerSeries v = expand(viennot_fraction(), 8);
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(v[n] == IntPoly((BigInt(1) << (n - 1)) * normalized_h(n - 1)));
    }
}

TEST_CASE("fraction specs from JSON") {
    const auto s = fraction_from_json(nlohmann::json::parse(R"({"kind":"S","c":[1,1,1,4,4,9,9,16,16]})"));
    CHECK(expand(s, 5) == expand(viennot_fraction(), 5));
    const auto j = fraction_from_json(nlohmann::json::parse(R"({"kind":"J","gamma":[2],"lambda":[]})"));
    CHECK(expand(j, 3)[3] == IntPoly(8));
    const auto poly = fraction_from_json(nlohmann::json::parse(R"({"kind":"S","c":[1,[0,1]]})"));
    CHECK(expand(poly, 2)[2] == IntPoly{0, 0, 1});
    const auto preset = fraction_from_json(nlohmann::json::parse(R"({"preset":"hn"})"));
    CHECK(expand(preset, 4)[4] == IntPoly(38));
    CHECK_THROWS_AS(fraction_from_json(nlohmann::json::parse(R"({"kind":"X"})")), DomainError);
    CHECK_THROWS_AS(fraction_from_json(nlohmann::json::parse(R"({"kind":"S","c":[1.5]})")), DomainError);
}
