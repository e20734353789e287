// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "genocchi/admissible.hpp"
#include "genocchi/contfrac.hpp"
#include "genocchi/dellac.hpp"
#include "genocchi/hanzeng.hpp"
#include "genocchi/motzkin.hpp"
#include "genocchi/oracles.hpp"
#include "genocchi/seidel.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace genocchi;

namespace {

struct Criterion {
    std::string title;
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            problems.push_back(what);
        }
    }
};

struct Shell {
    int status;
    std::string out;
};

Shell shell(const std::string& cmd) {
    std::string out;
    FILE* p = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (p == nullptr) {
        return {-1, {}};
    }
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) {
        out.append(buf, n);
    }
    const int raw = ::pclose(p);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string kCli = GENOCCHI_CLI_PATH;
const std::string kMutantCli = GENOCCHI_MUTANT_CLI_PATH;

const std::vector<IntPoly> kGoldenPolys{
    IntPoly{1},
    IntPoly{1, 1},
    IntPoly{1, 2, 3, 1},
    IntPoly{1, 3, 7, 10, 10, 6, 1},
};

void golden_sequences(Criterion& c) {
    auto expect_line = [&](const std::string& args, const std::string& want) {
        const Shell r = shell(kCli + " " + args);
        c.expect(r.status == 0 && r.out == want + "\n", "`" + args + "` printed '" + r.out + "'");
    };
    expect_line("seq h --count 7", "1 1 2 7 38 295 3098");
    expect_line("seq H --count 5", "1 2 8 56 608");
    expect_line("seq genocchi1 --count 5", "1 1 3 17 155");
}

void golden_polynomials(Criterion& c) {
    for (int n = 1; n <= 4; ++n) {
        const IntPoly& want = kGoldenPolys[static_cast<std::size_t>(n - 1)];
        c.expect(h_poly_dellac(n) == want, "dellac n=" + std::to_string(n));
        c.expect(h_poly_fermionic(n) == want, "fermionic n=" + std::to_string(n));
        c.expect(h_poly_laurent(n) == want, "laurent n=" + std::to_string(n));
    }
    const Shell r = shell(kCli + " poly hq --n 4");
    c.expect(r.out == "1 + 3*q + 7*q^2 + 10*q^3 + 10*q^4 + 6*q^5 + q^6\n", "poly hq --n 4");
}

void count_agreement(Criterion& c) {
    for (int n = 1; n <= 7; ++n) {
        const BigInt h = normalized_h(static_cast<std::size_t>(n));
        const std::string at = " n=" + std::to_string(n);
        c.expect(enumerate_dellac(n, {}) == h, "dellac" + at);
        c.expect(enumerate_admissible(n, {}) == h, "admissible" + at);
        c.expect(count_closed_column_graded(n) == h, "closed subsets" + at);
        c.expect(h_motzkin_rational(n) == h, "rational path sum" + at);
        c.expect(weighted_path_sum(n, integer_weights()) == h, "integer path sum" + at);
    }
    for (int n = 1; n <= 4; ++n) {
        c.expect(count_dumont(n) == normalized_h(static_cast<std::size_t>(n)), "dumont n=" + std::to_string(n));
    }
    for (int n = 1; n <= 6; ++n) {
        c.expect(count_triangle_pairs(n) == normalized_h(static_cast<std::size_t>(n + 1)),
                 "triangle pairs n=" + std::to_string(n));
    }
}

void dellac_catalogue(Criterion& c) {
    auto cfg = [](std::vector<std::pair<int, int>> cols) { return DellacConfig{3, std::move(cols)}; };
    const std::set<DellacConfig> catalogue{
        cfg({{1, 2}, {3, 4}, {5, 6}}), cfg({{1, 2}, {3, 5}, {4, 6}}), cfg({{1, 2}, {4, 5}, {3, 6}}),
        cfg({{1, 3}, {2, 4}, {5, 6}}), cfg({{1, 3}, {2, 5}, {4, 6}}), cfg({{1, 4}, {2, 3}, {5, 6}}),
        cfg({{1, 4}, {2, 5}, {3, 6}}),
    };
    const auto found = collect_dellac(3);
    c.expect(found.size() == 7, "expected 7 configurations");
    c.expect(std::set<DellacConfig>(found.begin(), found.end()) == catalogue, "set differs from catalogue");
    std::vector<int> lengths;
    for (const auto& d : found) {
        lengths.push_back(dellac_length(d));
    }
    std::sort(lengths.begin(), lengths.end());
    c.expect(lengths == std::vector<int>{0, 1, 1, 2, 2, 2, 3}, "length multiset");
    c.expect(h_poly_dellac(3) == IntPoly{1, 2, 3, 1}, "generating polynomial");
}

void generating_functions(Criterion& c) {
    for (auto via : {TildeRoute::F1, TildeRoute::F2}) {
        const PowerSeries s = tilde_h_series(6, via);
        for (int n = 0; n <= 6; ++n) {
            c.expect(s[static_cast<std::size_t>(n)] == tilde_h(n),
                     std::string(via == TildeRoute::F1 ? "f1" : "f2") + " n=" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        const auto d = static_cast<std::size_t>(n * (n - 1) / 2);
        c.expect(tilde_h(n) == poly_reverse(kGoldenPolys[static_cast<std::size_t>(n - 1)], d),
                 "tilde_h from golden polynomial n=" + std::to_string(n));
    }
    const PowerSeries at1 = expand(f1_fraction(), 8).at_q(1);
    const PowerSeries hn = expand(hn_fraction(), 8);
    const PowerSeries v = expand(viennot_fraction(), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        c.expect(at1[n] == hn[n] && hn[n] == IntPoly(normalized_h(n)), "q=1 chain n=" + std::to_string(n));
        if (n >= 1) {
            const BigInt want = (BigInt(1) << (n - 1)) * normalized_h(n - 1);
            c.expect(v[n] == IntPoly(want) && want == median_genocchi(n), "viennot n=" + std::to_string(n));
        }
    }
}

void hanzeng_identity(Criterion& c) {
    for (int n = 1; n <= 6; ++n) {
        try {
            c.expect(hanzeng_barc(n + 1) == tilde_h(n), "barc(n+1) != tilde_h(n) at n=" + std::to_string(n));
        } catch (const std::exception& e) {
            c.expect(false, std::string("n=") + std::to_string(n) + ": " + e.what());
        }
    }
}

bool same_series(const CFSpec& a, const CFSpec& b) { return expand(a, 10) == expand(b, 10); }

void contractions(Criterion& c) {
    c.expect(same_series(f2_fraction(), contract_S_to_J(f2_fraction())), "f2 -> J");
    c.expect(same_series(f2_fraction(), f1_fraction()), "f2 vs f1");
    const JFraction j = contract_S_to_J(f2_fraction());
    for (int k = 1; k <= 6; ++k) {
        c.expect(j.gamma(k) == f1_fraction().gamma(k) && j.lambda(k) == f1_fraction().lambda(k),
                 "f2 contraction level " + std::to_string(k));
    }
    const SAffineFraction a = contract_S_to_J_affine(viennot_fraction());
    c.expect(same_series(viennot_fraction(), a), "viennot affine");
    for (int k = 1; k <= 6; ++k) {
        const long tri = static_cast<long>(k) * (k + 1) / 2;
        c.expect(a.gamma(k) == IntPoly(BigInt(2L * k * k)) && a.lambda(k) == IntPoly(BigInt(4 * tri * tri)),
                 "viennot intermediate level " + std::to_string(k));
    }
    std::mt19937_64 rng(20100115);
    for (int i = 0; i < 100; ++i) {
        std::vector<IntPoly> coeffs;
        for (int k = 0; k <= 12; ++k) {
            coeffs.emplace_back(BigInt(rng() % 5 + 1));
        }
        const SFraction s{[coeffs](int k) {
            return k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : IntPoly{};
        }};
        c.expect(same_series(s, contract_S_to_J(s)), "random J instance " + std::to_string(i));
        c.expect(same_series(s, contract_S_to_J_affine(s)), "random affine instance " + std::to_string(i));
    }
}

void divisibility(Criterion& c) {
    for (std::size_t n = 1; n <= 12; ++n) {
        c.expect(median_genocchi(n + 1) % (BigInt(1) << n) == 0, "H_" + std::to_string(2 * n + 1));
    }
}

void structure(Criterion& c) {
    for (int n = 1; n <= 7; ++n) {
        const IntPoly p = h_poly_fermionic(n);
        c.expect(p.degree() == static_cast<std::size_t>(n * (n - 1) / 2) && p.coeff(0) == 1 && p.leading() == 1,
                 "shape of h_" + std::to_string(n) + "(q)");
    }
    for (int n = 0; n <= 10; ++n) {
        enumerate_motzkin(n, [&](const MotzkinPath& f) {
            const long e = fermionic_exponent(f);
            c.expect(e >= 0 && e == regrouped_exponent(f), "exponent on path " + to_text(f));
        });
    }
}

void mutation(Criterion& c) {
    const Shell healthy = shell(kCli + " verify --n-max 3");
    c.expect(healthy.status == 0, "unmutated verify should pass");
    const Shell mutant = shell(kMutantCli + " verify --n-max 3 --json");
    c.expect(mutant.status == 1, "mutant verify exit status " + std::to_string(mutant.status));
    const Shell count = shell(kMutantCli + " enumerate dellac --n 3 --limit 0");
    c.expect(count.out != "total: 7\n", "mutant still finds 7 configurations");
    c.expect(mutant.out.find("\"name\":\"counts.six_way\"") != std::string::npos &&
                 mutant.out.find("\"failures\":0") == std::string::npos,
             "mutant report lacks failures");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"1 golden sequences (seq h/H/genocchi1)", golden_sequences},
        {"2 golden polynomials h_1..h_4, three routes", golden_polynomials},
        {"3 six-way counts n<=7, Dumont n<=4, triangle pairs n<=6", count_agreement},
        {"4 Dellac n=3 catalogue and lengths", dellac_catalogue},
        {"5 f1/f2 series, q=1 chain, Viennot", generating_functions},
        {"6 Han-Zeng barc(n+1) = tilde_h(n), n<=6", hanzeng_identity},
        {"7 contraction identities through order 10", contractions},
        {"8 divisibility of H_{2n+1} by 2^n, n<=12", divisibility},
        {"9 degree/constant/leading and path exponents", structure},
        {"10 mutation sensitivity of verify", mutation},
    };
    int failed = 0;
    for (const auto& [title, body] : criteria) {
        Criterion c{title, {}};
        try {
            body(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.problems.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS  " : "FAIL  ") << title << '\n';
        for (std::size_t i = 0; i < std::min<std::size_t>(c.problems.size(), 5); ++i) {
            std::cout << "        " << c.problems[i] << '\n';
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
