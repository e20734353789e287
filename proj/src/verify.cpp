#include "genocchi/verify.hpp"

#include "genocchi/admissible.hpp"
#include "genocchi/contfrac.hpp"
#include "genocchi/dellac.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/hanzeng.hpp"
#include "genocchi/motzkin.hpp"
#include "genocchi/oracles.hpp"
#include "genocchi/seidel.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace genocchi {

namespace {

// Upper n for models whose ranges are capped independently of n_max.
struct RangeCap {
    const char* model;
    int max_n;
};

constexpr RangeCap kRangeCaps[] = {
    {"dumont", 4},
    {"triangle_pairs", 6},
    {"divisibility", 12},
    {"path_exponents", 10},
    {"random_contractions", 100},
    {"contraction_order", 10},
};

int range_cap(const std::string& model) {
    for (const auto& c : kRangeCaps) {
        if (model == c.model) {
            return c.max_n;
        }
    }
    throw DomainError("no range cap for " + model);
}

std::string range_text(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

// Outcome of one check body: empty string = pass, otherwise the failure detail.
struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Check run_check(std::string name, std::string range, const std::function<Outcome()>& body) {
    Check c{std::move(name), std::move(range), CheckStatus::Pass, {}};
    try {
        Outcome o = body();
        c.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
        c.detail = std::move(o.detail);
    } catch (const ResourceLimit& e) {
        c.status = CheckStatus::Skipped;
        c.detail = std::string("resource limit: ") + e.what();
    } catch (const std::exception& e) {
        c.status = CheckStatus::Fail;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

std::string join(const std::vector<BigInt>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + v[i].str();
    }
    return out;
}

Outcome six_way_counts(int n_max) {
    std::vector<BigInt> hs{normalized_h(0)};
    for (int n = 1; n <= n_max; ++n) {
        const BigInt seidel = normalized_h(static_cast<std::size_t>(n));
        hs.push_back(seidel);
        const BigInt dellac = enumerate_dellac(n, {});
        const BigInt admissible = enumerate_admissible(n, {});
        const BigInt closed = count_closed_column_graded(n);
        const BigInt rational = h_motzkin_rational(n);
        const BigInt integer = weighted_path_sum(n, integer_weights());
        for (const BigInt* v : {&dellac, &admissible, &closed, &rational, &integer}) {
            if (*v != seidel) {
                std::ostringstream os;
                os << "n=" << n << ": seidel=" << seidel << " dellac=" << dellac
                   << " admissible=" << admissible << " closed=" << closed << " motzkin_rational=" << rational
                   << " motzkin_integer=" << integer;
                return fail(os.str());
            }
        }
    }
    return pass("h-values: " + join(hs));
}

Outcome oracle_counts(int hi, const std::function<BigInt(int)>& count, int h_shift) {
    std::vector<BigInt> got;
    for (int n = 1; n <= hi; ++n) {
        const BigInt c = count(n);
        const BigInt expect = normalized_h(static_cast<std::size_t>(n + h_shift));
        got.push_back(c);
        if (c != expect) {
            return fail("n=" + std::to_string(n) + ": oracle=" + c.str() + " h=" + expect.str());
        }
    }
    return pass("counts: " + join(got));
}

Outcome three_way_polys(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const IntPoly d = h_poly_dellac(n);
        const IntPoly f = h_poly_fermionic(n);
        const IntPoly l = h_poly_laurent(n);
        if (d != f || f != l) {
            return fail("n=" + std::to_string(n) + ": dellac=" + to_string(d) + " fermionic=" + to_string(f) +
                        " laurent=" + to_string(l));
        }
    }
    return pass("h_" + std::to_string(n_max) + "(q) = " + to_string(h_poly_fermionic(n_max)));
}

Outcome poly_structure(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const IntPoly p = h_poly_dellac(n);
        const auto expect_deg = static_cast<std::size_t>(n * (n - 1) / 2);
        if (p.is_zero() || p.degree() != expect_deg || p.coeff(0) != 1 || p.leading() != 1 ||
            p.eval(1) != normalized_h(static_cast<std::size_t>(n))) {
            return fail("n=" + std::to_string(n) + ": " + to_string(p));
        }
    }
    return pass();
}

Outcome series_vs_tilde(int n_max, TildeRoute via) {
    const PowerSeries s = tilde_h_series(static_cast<std::size_t>(n_max), via);
    for (int n = 0; n <= n_max; ++n) {
        if (s[static_cast<std::size_t>(n)] != tilde_h(n)) {
            return fail("n=" + std::to_string(n) + ": series=" + to_string(s[static_cast<std::size_t>(n)]) +
                        " tilde_h=" + to_string(tilde_h(n)));
        }
    }
    return pass();
}

Outcome flajolet_consistency(int n_max) {
    for (const char* name : {"f1", "f2", "hn", "viennot"}) {
        const CFSpec spec = named_fraction(name);
        const JFraction j = std::holds_alternative<JFraction>(spec) ? std::get<JFraction>(spec)
                                                                    : contract_S_to_J(std::get<SFraction>(spec));
        const PowerSeries s = expand(spec, static_cast<std::size_t>(n_max));
        const auto ws = path_weights(j);
        for (int n = 0; n <= n_max; ++n) {
            const IntPoly paths = weighted_path_sum(n, ws) * j.numerator;
            if (paths != s[static_cast<std::size_t>(n)]) {
                return fail(std::string(name) + " n=" + std::to_string(n) + ": series=" +
                            to_string(s[static_cast<std::size_t>(n)]) + " paths=" + to_string(paths));
            }
        }
    }
    return pass();
}

Outcome hanzeng_identity(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const IntPoly barc = hanzeng_barc(n + 1);
        if (barc != tilde_h(n)) {
            return fail("n=" + std::to_string(n) + ": barc=" + to_string(barc) + " tilde_h=" + to_string(tilde_h(n)));
        }
    }
    return pass();
}

Outcome hanzeng_at_one(int n_max) {
    for (int n = 1; n <= n_max + 1; ++n) {
        const BigInt v = hanzeng_barc(n).eval(1);
        if (v != normalized_h(static_cast<std::size_t>(n - 1))) {
            return fail("n=" + std::to_string(n) + ": barc(1)=" + v.str());
        }
    }
    return pass();
}

Outcome q1_chain(int n_max) {
    const auto order = static_cast<std::size_t>(n_max);
    const PowerSeries f1 = expand(f1_fraction(), order).at_q(1);
    const PowerSeries hn = expand(hn_fraction(), order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (f1[n] != hn[n] || hn[n] != IntPoly(normalized_h(n))) {
            return fail("n=" + std::to_string(n) + ": f1(q=1)=" + to_string(f1[n]) + " hn=" + to_string(hn[n]));
        }
    }
    return pass();
}

Outcome viennot(int n_max) {
    const auto order = static_cast<std::size_t>(n_max);
    const PowerSeries v = expand(viennot_fraction(), order);
    if (v[0] != IntPoly(1)) {
        return fail("constant term " + to_string(v[0]));
    }
    for (std::size_t n = 1; n <= order; ++n) {
        const BigInt expect = (BigInt(1) << (n - 1)) * normalized_h(n - 1);
        if (v[n] != IntPoly(expect) || expect != median_genocchi(n)) {
            return fail("n=" + std::to_string(n) + ": viennot=" + to_string(v[n]) + " 2^(n-1) h=" + expect.str());
        }
    }
    return pass();
}

Outcome divisibility() {
    for (std::size_t n = 1; n <= static_cast<std::size_t>(range_cap("divisibility")); ++n) {
        if (median_genocchi(n + 1) % (BigInt(1) << n) != 0) {
            return fail("H_" + std::to_string(2 * n + 1) + " mod 2^" + std::to_string(n) + " != 0");
        }
    }
    return pass();
}

Outcome path_exponents() {
    const int hi = range_cap("path_exponents");
    for (int n = 0; n <= hi; ++n) {
        std::string bad;
        enumerate_motzkin(n, [&](const MotzkinPath& f) {
            const long e = fermionic_exponent(f);
            if (bad.empty() && (e < 0 || e != regrouped_exponent(f))) {
                bad = "path " + to_text(f) + ": exponent " + std::to_string(e) + " vs " +
                      std::to_string(regrouped_exponent(f));
            }
        });
        if (!bad.empty()) {
            return fail(bad);
        }
    }
    return pass();
}

bool series_agree(const CFSpec& a, const CFSpec& b, std::size_t order) { return expand(a, order) == expand(b, order); }

Outcome named_contractions() {
    const auto order = static_cast<std::size_t>(range_cap("contraction_order"));
    if (!series_agree(f2_fraction(), contract_S_to_J(f2_fraction()), order)) {
        return fail("f2 and its J contraction differ");
    }
    if (!series_agree(f2_fraction(), f1_fraction(), order)) {
        return fail("f2 and f1 expansions differ");
    }
    // The Viennot intermediate: 1 + s / (1 - 2s - 4s^2 / (1 - 2*4s - 4*3^2 s^2 / ...)).
    const SAffineFraction displayed{
        IntPoly(1),
        IntPoly(1),
        [](int k) { return IntPoly(BigInt(2L * k * k)); },
        [](int k) {
            const long tri = static_cast<long>(k) * (k + 1) / 2;
            return IntPoly(BigInt(4L * tri * tri));
        },
    };
    const SAffineFraction contracted = contract_S_to_J_affine(viennot_fraction());
    for (int k = 1; k <= 12; ++k) {
        if (contracted.gamma(k) != displayed.gamma(k) || contracted.lambda(k) != displayed.lambda(k)) {
            return fail("viennot affine level " + std::to_string(k) + " differs from the displayed fraction");
        }
    }
    if (!series_agree(viennot_fraction(), contracted, order) || !series_agree(contracted, displayed, order)) {
        return fail("viennot affine expansion differs");
    }
    return pass();
}

Outcome random_contractions(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto order = static_cast<std::size_t>(range_cap("contraction_order"));
    const int instances = range_cap("random_contractions");
    for (int i = 0; i < instances; ++i) {
        std::vector<IntPoly> c;
        for (std::size_t k = 0; k <= order + 2; ++k) {
            c.emplace_back(BigInt(rng() % 5 + 1));
        }
        const SFraction s{[c](int k) { return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : IntPoly{}; }};
        if (!series_agree(s, contract_S_to_J(s), order) || !series_agree(s, contract_S_to_J_affine(s), order)) {
            std::string seq;
            for (const auto& x : c) {
                seq += (seq.empty() ? "" : ",") + to_string(x);
            }
            return fail("instance " + std::to_string(i) + " c=" + seq);
        }
    }
    return pass(std::to_string(instances) + " instances, seed " + std::to_string(seed));
}

} // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Skipped:
        return "skipped";
    }
    return "unknown";
}

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; }));
}

const Check* CheckReport::find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

CheckReport crosscheck(int n_max, std::uint64_t seed) {
    if (n_max < 1 || n_max > 8) {
        throw DomainError("crosscheck: n_max must be in 1..8");
    }
    CheckReport report;
    report.n_max = n_max;
    report.seed = seed;
    auto& out = report.checks;
    const std::string all = range_text(1, n_max);
    const int dumont_hi = std::min(n_max, range_cap("dumont"));
    const int pairs_hi = std::min(n_max, range_cap("triangle_pairs"));

    out.push_back(run_check("counts.six_way", all, [&] { return six_way_counts(n_max); }));
    out.push_back(run_check("oracle.dumont", range_text(1, dumont_hi),
                            [&] { return oracle_counts(dumont_hi, count_dumont, 0); }));
    out.push_back(run_check("oracle.triangle_pairs", range_text(1, pairs_hi),
                            [&] { return oracle_counts(pairs_hi, count_triangle_pairs, 1); }));
    out.push_back(run_check("poly.three_way", all, [&] { return three_way_polys(n_max); }));
    out.push_back(run_check("poly.structure", all, [&] { return poly_structure(n_max); }));
    out.push_back(run_check("series.f1_vs_tilde_h", range_text(0, n_max),
                            [&] { return series_vs_tilde(n_max, TildeRoute::F1); }));
    out.push_back(run_check("series.f2_vs_tilde_h", range_text(0, n_max),
                            [&] { return series_vs_tilde(n_max, TildeRoute::F2); }));
    out.push_back(run_check("series.flajolet_paths", range_text(0, n_max), [&] { return flajolet_consistency(n_max); }));
    out.push_back(run_check("hanzeng.barc_vs_tilde_h", all, [&] { return hanzeng_identity(n_max); }));
    out.push_back(run_check("hanzeng.barc_at_q1", range_text(1, n_max + 1), [&] { return hanzeng_at_one(n_max); }));
    out.push_back(run_check("series.q1_f1_vs_hn", range_text(0, n_max), [&] { return q1_chain(n_max); }));
    out.push_back(run_check("series.viennot", all, [&] { return viennot(n_max); }));
    out.push_back(run_check("divisibility.median_genocchi", range_text(1, range_cap("divisibility")),
                            [] { return divisibility(); }));
    out.push_back(run_check("paths.exponent_identity", range_text(0, range_cap("path_exponents")),
                            [] { return path_exponents(); }));
    out.push_back(run_check("contraction.named_instances", "order=" + std::to_string(range_cap("contraction_order")),
                            [] { return named_contractions(); }));
    out.push_back(run_check("contraction.random", "order=" + std::to_string(range_cap("contraction_order")),
                            [&] { return random_contractions(seed); }));

    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return report;
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"range", c.range}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    return nlohmann::json{
        {"n_max", r.n_max}, {"seed", r.seed}, {"failures", r.failures()}, {"checks", std::move(checks)}};
}

std::string to_table(const CheckReport& r) {
    std::size_t name_w = 5;
    std::size_t range_w = 5;
    for (const auto& c : r.checks) {
        name_w = std::max(name_w, c.name.size());
        range_w = std::max(range_w, c.range.size());
    }
    std::ostringstream os;
    auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        os << a << std::string(name_w - a.size() + 2, ' ') << b << std::string(range_w - b.size() + 2, ' ') << c
           << std::string(9 - c.size(), ' ') << d << '\n';
    };
    row("check", "range", "status", "detail");
    for (const auto& c : r.checks) {
        row(c.name, c.range, to_string(c.status), c.detail);
    }
    os << "seed " << r.seed << ", " << r.failures() << " failure(s)\n";
    return os.str();
}

} // namespace genocchi
