#include "genocchi/motzkin.hpp"

#include "genocchi/qbinomial.hpp"

#include <sstream>

namespace genocchi {

namespace {

class MotzkinSearch {
public:
    MotzkinSearch(int n, const MotzkinVisitor& visit) : n_(n), visit_(visit) {
        path_.heights.assign(static_cast<std::size_t>(n + 1), 0);
    }

    std::uint64_t run() {
        walk(0);
        return count_;
    }

private:
    void walk(int k) {
        if (k == n_) {
            ++count_;
            if (visit_) {
                visit_(path_);
            }
            return;
        }
        const int h = path_.heights[static_cast<std::size_t>(k)];
        const int remaining = n_ - k - 1;
        for (int next : {h - 1, h, h + 1}) {
            if (next < 0 || next > remaining) {
                continue;
            }
            path_.heights[static_cast<std::size_t>(k + 1)] = next;
            walk(k + 1);
        }
    }

    int n_;
    const MotzkinVisitor& visit_;
    MotzkinPath path_;
    std::uint64_t count_ = 0;
};

std::size_t idx(long k) { return static_cast<std::size_t>(k); }

} // namespace

BigInt enumerate_motzkin(int n, const MotzkinVisitor& visit) {
    if (n < 0) {
        throw DomainError("enumerate_motzkin: n must be nonnegative");
    }
    require_within_limit(Model::MotzkinEnumeration, n);
    return MotzkinSearch(n, visit).run();
}

int rises_plus_falls(const MotzkinPath& f) {
    int steps = 0;
    for (std::size_t k = 0; k + 1 < f.heights.size(); ++k) {
        steps += f.heights[k] != f.heights[k + 1] ? 1 : 0;
    }
    return steps;
}

WeightSystem<BigInt> integer_weights() {
    auto updown = [](int m) { return BigInt((m + 1) * (m + 2) / 2); };
    return {updown, updown, [](int m) { return BigInt((m + 1) * (m + 1)); }};
}

WeightSystem<LaurentPoly> laurent_weights() {
    return {
        [](int m) { return LaurentPoly(q_binomial(idx(m + 2), 2), -3L * m); },
        [](int m) { return LaurentPoly(q_binomial(idx(m + 2), 2), -static_cast<long>(m) - 1); },
        [](int m) { return LaurentPoly(q_binomial(idx(m + 1), 1).pow(2), -2L * m); },
    };
}

Rational rational_term(const MotzkinPath& f) {
    BigInt num = 1;
    for (int h : f.heights) {
        num *= BigInt((1 + h) * (1 + h));
    }
    return Rational(num, BigInt(1) << rises_plus_falls(f));
}

BigInt h_motzkin_rational(int n) {
    if (n < 1) {
        throw DomainError("h_motzkin_rational: n must be positive");
    }
    Rational total = 0;
    enumerate_motzkin(n, [&](const MotzkinPath& f) { total += rational_term(f); });
    if (denominator(total) != 1) {
        throw InternalInconsistency("weighted Motzkin sum for n=" + std::to_string(n) +
                                    " is not an integer: " + total.str());
    }
    return numerator(total);
}

IntPoly q_binomial_or_zero(long m, long n) {
    if (m < 0 || n < 0 || n > m) {
        return {};
    }
    return q_binomial(idx(m), idx(n));
}

long fermionic_exponent(const MotzkinPath& f) {
    const auto& h = f.heights;
    long e = 0;
    for (long k = 1; k + 1 < static_cast<long>(h.size()); ++k) {
        e += (k - h[idx(k)]) * (1 - h[idx(k)] + h[idx(k + 1)]);
    }
    return e;
}

long regrouped_exponent(const MotzkinPath& f) {
    const auto& h = f.heights;
    const long n = f.length();
    long e = n * (n - 1) / 2;
    for (long k = 1; k < n; ++k) {
        e += static_cast<long>(h[idx(k)]) * (h[idx(k)] - h[idx(k + 1)] - 2);
    }
    return e;
}

IntPoly fermionic_term(const MotzkinPath& f) {
    const long e = fermionic_exponent(f);
    if (e < 0) {
        throw InternalInconsistency("negative fermionic exponent on path " + to_text(f));
    }
    const auto& h = f.heights;
    IntPoly term = IntPoly::monomial(1, idx(e));
    for (long k = 1; k < f.length(); ++k) {
        term *= q_binomial_or_zero(1 + h[idx(k - 1)], h[idx(k)]);
        term *= q_binomial_or_zero(1 + h[idx(k + 1)], h[idx(k)]);
    }
    return term;
}

IntPoly h_poly_fermionic(int n) {
    if (n < 1) {
        throw DomainError("h_poly_fermionic: n must be positive");
    }
    require_within_limit(Model::PathSum, n);
    // Step k -> k+1 from height a to b carries
    //   [k >= 1]     q^{(k-a)(1-a+b)} [1+b, a]   (index k of the second product)
    //   [k+1 <= n-1] [1+a, b]                    (index k+1 of the first product)
    std::vector<IntPoly> cur{IntPoly(1)};
    for (long k = 0; k < n; ++k) {
        const long reach = std::min<long>(k + 1, n - k - 1);
        std::vector<IntPoly> next(idx(reach + 1));
        for (long a = 0; a < static_cast<long>(cur.size()); ++a) {
            if (cur[idx(a)].is_zero()) {
                continue;
            }
            for (long b = std::max<long>(a - 1, 0); b <= std::min(a + 1, reach); ++b) {
                IntPoly factor(1);
                if (k >= 1) {
                    const long e = (k - a) * (1 - a + b);
                    if (e < 0) {
                        throw InternalInconsistency("negative fermionic exponent at n=" +
                                                    std::to_string(n) + ", k=" + std::to_string(k));
                    }
                    factor = q_binomial_or_zero(1 + b, a).shifted(idx(e));
                }
                if (k + 1 <= n - 1) {
                    factor *= q_binomial_or_zero(1 + a, b);
                }
                next[idx(b)] += cur[idx(a)] * factor;
            }
        }
        cur = std::move(next);
    }
    return cur[0];
}

IntPoly h_poly_laurent(int n) {
    if (n < 1) {
        throw DomainError("h_poly_laurent: n must be positive");
    }
    const LaurentPoly sum = weighted_path_sum(n, laurent_weights()).shifted(static_cast<long>(n) * (n - 1) / 2);
    if (sum.offset() < 0) {
        throw InternalInconsistency("Laurent path sum for n=" + std::to_string(n) +
                                    " keeps a negative exponent: " + to_string(sum));
    }
    return sum.to_poly();
}

IntPoly tilde_h(int n) {
    if (n < 0) {
        throw DomainError("tilde_h: n must be nonnegative");
    }
    if (n == 0) {
        return IntPoly(1);
    }
    return poly_reverse(h_poly_fermionic(n), idx(static_cast<long>(n) * (n - 1) / 2));
}

std::string to_text(const MotzkinPath& f) {
    std::ostringstream os;
    for (std::size_t k = 0; k < f.heights.size(); ++k) {
        os << (k ? " " : "") << f.heights[k];
    }
    return os.str();
}

nlohmann::json to_json(const MotzkinPath& f) { return nlohmann::json{{"heights", f.heights}}; }

} // namespace genocchi
