#include "genocchi/contfrac.hpp"

#include "genocchi/errors.hpp"
#include "genocchi/qbinomial.hpp"

namespace genocchi {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

// Evaluates a generator on first..last once.
std::vector<IntPoly> tabulate(const CoeffFn& f, int first, int last) {
    std::vector<IntPoly> out(idx(std::max(last + 1, 0)));
    for (int k = first; k <= last; ++k) {
        out[idx(k)] = f(k);
    }
    return out;
}

// 1 / (1 - g(top) s - l(top+1) s^2 / (1 - g(top+1) s - ...)), levels
// top..top+depth-1, with the innermost tail replaced by 1.
PowerSeries expand_j_tail(const CoeffFn& gamma, const CoeffFn& lambda, int top, std::size_t depth,
                          std::size_t order) {
    if (depth == 0) {
        return PowerSeries::constant(IntPoly(1), order);
    }
    const int bottom = top + static_cast<int>(depth) - 1;
    const auto g = tabulate(gamma, top, bottom);
    const auto l = tabulate(lambda, top + 1, bottom + 1);
    PowerSeries tail = PowerSeries::constant(IntPoly(1), order);
    for (int k = bottom; k >= top; --k) {
        PowerSeries den = PowerSeries::constant(IntPoly(1), order);
        if (order >= 1) {
            den[1] -= g[idx(k)];
        }
        if (k < bottom && order >= 2) {
            den -= (tail * l[idx(k + 1)]).shifted(2);
        }
        tail = den.inverse();
    }
    return tail;
}

PowerSeries expand_s(const SFraction& s, std::size_t order, std::size_t depth) {
    const auto c = tabulate(s.c, 0, static_cast<int>(depth));
    PowerSeries tail = PowerSeries::constant(IntPoly(1), order);
    for (int k = static_cast<int>(depth); k >= 1; --k) {
        PowerSeries den = PowerSeries::constant(IntPoly(1), order);
        den -= (tail * c[idx(k)]).shifted(1);
        tail = den.inverse();
    }
    return tail * c[0];
}

IntPoly from_list(const std::vector<IntPoly>& list, int k, int first) {
    const int i = k - first;
    return i >= 0 && i < static_cast<int>(list.size()) ? list[idx(i)] : IntPoly{};
}

std::vector<IntPoly> poly_list(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw DomainError("coefficient list must be a JSON array");
    }
    std::vector<IntPoly> out;
    for (const auto& item : j) {
        if (item.is_array() || item.is_object()) {
            out.push_back(intpoly_from_json(item));
        } else if (item.is_string()) {
            out.emplace_back(parse_bigint(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.emplace_back(BigInt(item.get<long long>()));
        } else {
            throw DomainError("coefficient must be an integer, decimal string or coefficient array");
        }
    }
    return out;
}

IntPoly single_poly(const nlohmann::json& j) {
    auto v = poly_list(nlohmann::json::array({j}));
    return v.front();
}

} // namespace

std::size_t sufficient_depth(const CFSpec& spec, std::size_t order) {
    return std::visit(overloaded{
                          [&](const SFraction&) { return order + 1; },
                          [&](const auto&) { return (order + 1) / 2 + 1; },
                      },
                      spec);
}

PowerSeries expand(const CFSpec& spec, std::size_t order) {
    return expand_at_depth(spec, order, sufficient_depth(spec, order));
}

PowerSeries expand_at_depth(const CFSpec& spec, std::size_t order, std::size_t depth) {
    return std::visit(
        overloaded{
            [&](const JFraction& j) { return expand_j_tail(j.gamma, j.lambda, 0, depth, order) * j.numerator; },
            [&](const SFraction& s) { return expand_s(s, order, depth); },
            [&](const SAffineFraction& a) {
                // lambda(k) couples level k to level k+1
                auto lambda = a.lambda;
                const CoeffFn below = [lambda](int k) { return lambda(k - 1); };
                PowerSeries inner = expand_j_tail(a.gamma, below, 1, depth, order);
                return PowerSeries::constant(a.head, order) + (inner * a.linear).shifted(1);
            },
        },
        spec);
}

JFraction contract_S_to_J(const SFraction& s) {
    auto c = s.c;
    return JFraction{
        c(0),
        [c](int k) { return k == 0 ? c(1) : c(2 * k) + c(2 * k + 1); },
        [c](int k) { return c(2 * k - 1) * c(2 * k); },
    };
}

SAffineFraction contract_S_to_J_affine(const SFraction& s) {
    auto c = s.c;
    return SAffineFraction{
        c(0),
        c(0) * c(1),
        [c](int k) { return c(2 * k - 1) + c(2 * k); },
        [c](int k) { return c(2 * k) * c(2 * k + 1); },
    };
}

WeightSystem<IntPoly> path_weights(const JFraction& j) {
    auto lambda = j.lambda;
    return {
        [lambda](int k) { return lambda(k + 1); },
        [](int) { return IntPoly(1); },
        j.gamma,
    };
}

JFraction f1_fraction() {
    return JFraction{
        IntPoly(1),
        [](int k) { return k == 0 ? IntPoly(1) : q_binomial(idx(k + 1), 1).pow(2); },
        [](int k) { return q_binomial(idx(k + 1), 2).pow(2).shifted(1); },
    };
}

SFraction f2_fraction() {
    return SFraction{[](int k) {
        if (k == 0) {
            return IntPoly(1);
        }
        const int level = (k + 1) / 2;
        IntPoly c = q_binomial(idx(level + 1), 2);
        return k % 2 == 1 ? c : c.shifted(1);
    }};
}

SFraction hn_fraction() {
    return SFraction{[](int k) {
        if (k == 0) {
            return IntPoly(1);
        }
        const long level = (k + 1) / 2;
        return IntPoly(BigInt(level * (level + 1) / 2));
    }};
}

SFraction viennot_fraction() {
    return SFraction{[](int k) {
        if (k == 0) {
            return IntPoly(1);
        }
        const long level = (k + 1) / 2;
        return IntPoly(BigInt(level * level));
    }};
}

CFSpec named_fraction(const std::string& name) {
    if (name == "f1") {
        return f1_fraction();
    }
    if (name == "f2") {
        return f2_fraction();
    }
    if (name == "hn") {
        return hn_fraction();
    }
    if (name == "viennot") {
        return viennot_fraction();
    }
    throw DomainError("unknown fraction '" + name + "' (expected f1, f2, hn or viennot)");
}

PowerSeries tilde_h_series(std::size_t order, TildeRoute via) {
    return via == TildeRoute::F1 ? expand(f1_fraction(), order) : expand(f2_fraction(), order);
}

CFSpec fraction_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw DomainError("fraction spec must be a JSON object");
    }
    if (j.contains("preset")) {
        return named_fraction(j.at("preset").get<std::string>());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "S") {
        auto c = poly_list(j.at("c"));
        return SFraction{[c](int k) { return from_list(c, k, 0); }};
    }
    if (kind == "J") {
        auto gamma = poly_list(j.value("gamma", nlohmann::json::array()));
        auto lambda = poly_list(j.value("lambda", nlohmann::json::array()));
        IntPoly numerator = j.contains("numerator") ? single_poly(j.at("numerator")) : IntPoly(1);
        return JFraction{
            std::move(numerator),
            [gamma](int k) { return from_list(gamma, k, 0); },
            [lambda](int k) { return from_list(lambda, k, 1); },
        };
    }
    throw DomainError("fraction spec needs \"preset\" or \"kind\" of \"J\" or \"S\"");
}

} // namespace genocchi
