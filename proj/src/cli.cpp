#include "genocchi/cli.hpp"

#include "genocchi/admissible.hpp"
#include "genocchi/contfrac.hpp"
#include "genocchi/dellac.hpp"
#include "genocchi/errors.hpp"
#include "genocchi/hanzeng.hpp"
#include "genocchi/motzkin.hpp"
#include "genocchi/oracles.hpp"
#include "genocchi/seidel.hpp"
#include "genocchi/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace genocchi::cli {

namespace {

struct Options {
    std::string which;
    int count = 0;
    int n = 0;
    std::optional<long> limit;
    int order = 0;
    std::string spec_file;
    int n_max = 0;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
};

int run_seq(const Options& o, std::ostream& out) {
    if (o.count < 0) {
        throw DomainError("--count must be nonnegative");
    }
    std::vector<BigInt> values;
    std::string label;
    for (int i = 0; i < o.count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (o.which == "h") {
            values.push_back(normalized_h(k));
            label = "h_n";
        } else if (o.which == "H") {
            values.push_back(median_genocchi(k + 1));
            label = "H_{2n-1}";
        } else {
            values.push_back(genocchi_first(k + 1));
            label = "g_{n,2n-1}";
        }
    }
    if (o.json) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : values) {
            vals.push_back(v.str());
        }
        nlohmann::json j{{"name", o.which}, {"values", std::move(vals)}};
        if (!label.empty()) {
            j["label"] = label;
        }
        out << j.dump() << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? " " : "") << values[i];
    }
    out << '\n';
    return kExitOk;
}

int run_poly(const Options& o, std::ostream& out) {
    IntPoly p;
    if (o.which == "hq") {
        p = h_poly_fermionic(o.n);
    } else if (o.which == "tildehq") {
        p = tilde_h(o.n);
    } else {
        p = hanzeng_barc(o.n);
    }
    out << (o.json ? to_json(p).dump() : to_string(p)) << '\n';
    return kExitOk;
}

template <typename Item>
void emit_item(const Item& item, const Options& o, long& shown, std::ostream& out) {
    if (o.limit && shown >= *o.limit) {
        return;
    }
    ++shown;
    if (o.json) {
        out << to_json(item).dump() << '\n';
        return;
    }
    out << to_text(item) << '\n';
}

int run_enumerate(const Options& o, std::ostream& out) {
    long shown = 0;
    BigInt total;
    if (o.which == "dellac") {
        total = enumerate_dellac(o.n, [&](const DellacConfig& d) { emit_item(d, o, shown, out); });
    } else if (o.which == "admissible") {
        total = enumerate_admissible(o.n, [&](const AdmissibleSequence& s) { emit_item(s, o, shown, out); });
    } else {
        total = enumerate_motzkin(o.n, [&](const MotzkinPath& f) { emit_item(f, o, shown, out); });
    }
    if (o.json) {
        out << nlohmann::json{{"total", total.str()}}.dump() << '\n';
    } else {
        out << "total: " << total << '\n';
    }
    return kExitOk;
}

int run_count(const Options& o, std::ostream& out) {
    out << (o.which == "dumont" ? count_dumont(o.n) : count_triangle_pairs(o.n)) << '\n';
    return kExitOk;
}

int run_series(const Options& o, std::ostream& out) {
    if (o.order < 0) {
        throw DomainError("--order must be nonnegative");
    }
    const auto order = static_cast<std::size_t>(o.order);
    if (o.which == "custom") {
        if (o.spec_file.empty()) {
            throw DomainError("series custom requires --spec FILE");
        }
        std::ifstream in(o.spec_file);
        if (!in) {
            throw DomainError("cannot open spec file '" + o.spec_file + "'");
        }
        nlohmann::json spec;
        try {
            spec = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("malformed spec file: ") + e.what());
        }
        out << to_json(expand(fraction_from_json(spec), order)).dump() << '\n';
        return kExitOk;
    }
    const PowerSeries s = expand(named_fraction(o.which), order);
    if (o.json) {
        out << to_json(s).dump() << '\n';
        return kExitOk;
    }
    const bool integral = std::all_of(s.coeffs().begin(), s.coeffs().end(),
                                      [](const IntPoly& c) { return c.is_constant(); });
    if (integral) {
        for (std::size_t n = 0; n <= order; ++n) {
            out << (n ? " " : "") << to_string(s[n]);
        }
        out << '\n';
    } else {
        for (std::size_t n = 0; n <= order; ++n) {
            out << "s^" << n << ": " << to_string(s[n]) << '\n';
        }
    }
    return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
    const CheckReport r = crosscheck(o.n_max, o.seed);
    out << (o.json ? to_json(r).dump() + "\n" : to_table(r));
    return r.failures() == 0 ? kExitOk : kExitCheckFailures;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Median Genocchi numbers, their q-analogues and continued fractions", "genocchi"};
    app.require_subcommand(1);
    Options o;

    auto* seq = app.add_subcommand("seq", "Print the first terms of an integer sequence");
    seq->add_option("which", o.which, "h (h_0, h_1, ...), H (H_1, H_3, ...) or genocchi1")
        ->required()
        ->check(CLI::IsMember({"h", "H", "genocchi1"}));
    seq->add_option("--count", o.count, "Number of terms")->required();
    seq->add_flag("--json", o.json, "Emit JSON");

    auto* poly = app.add_subcommand("poly", "Print a polynomial in q");
    poly->add_option("which", o.which, "hq = h_n(q), tildehq = reversed h_n(q), barc = Han-Zeng c_n(q)")
        ->required()
        ->check(CLI::IsMember({"hq", "tildehq", "barc"}));
    poly->add_option("--n", o.n, "Index")->required();
    poly->add_flag("--json", o.json, "Emit JSON");

    auto* en = app.add_subcommand("enumerate", "Stream combinatorial objects and print the total");
    en->add_option("which", o.which)->required()->check(CLI::IsMember({"dellac", "admissible", "motzkin"}));
    en->add_option("--n", o.n, "Size")->required();
    en->add_option("--limit", o.limit, "Print at most K objects (the total is unaffected)");
    en->add_flag("--json", o.json, "One JSON object per line");

    auto* count = app.add_subcommand("count", "Brute-force oracle counts");
    count->add_option("which", o.which, "dumont (gives h_n) or triangles (gives h_{n+1})")
        ->required()
        ->check(CLI::IsMember({"dumont", "triangles"}));
    count->add_option("--n", o.n, "Size")->required();

    auto* series = app.add_subcommand("series", "Expand a continued fraction as a power series in s");
    series->add_option("which", o.which)
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "hn", "viennot", "custom"}));
    series->add_option("--order", o.order, "Last power of s")->required();
    series->add_option("--spec", o.spec_file, "JSON fraction description (custom only)");
    series->add_flag("--json", o.json, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Cross-check every route; exit 1 on any failure");
    verify->add_option("--n-max", o.n_max, "Largest n, 1..8")->required();
    verify->add_option("--seed", o.seed, "Seed for random contraction instances");
    verify->add_flag("--json", o.json, "Emit JSON");

    // CLI11 consumes arguments from the back.
    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) {
        rest.pop_back();
    }
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) {
            return kExitOk;
        }
        err << app.help();
        return kExitUsage;
    }

    try {
        if (seq->parsed()) {
            return run_seq(o, out);
        }
        if (poly->parsed()) {
            return run_poly(o, out);
        }
        if (en->parsed()) {
            return run_enumerate(o, out);
        }
        if (count->parsed()) {
            return run_count(o, out);
        }
        if (series->parsed()) {
            return run_series(o, out);
        }
        return run_verify(o, out);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailures;
    }
}

} // namespace genocchi::cli
