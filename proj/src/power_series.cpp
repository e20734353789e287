#include "genocchi/power_series.hpp"

#include "genocchi/errors.hpp"

#include <algorithm>

namespace genocchi {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<IntPoly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::constant(IntPoly c, std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
    PowerSeries r(order());
    for (std::size_t n = k; n <= order(); ++n) {
        r.coeffs_[n] = coeffs_[n - k];
    }
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (coeffs_[0] != IntPoly(1)) {
        throw DomainError("series inverse requires constant term 1, got " + to_string(coeffs_[0]));
    }
    // v_0 = 1, v_n = -sum_{i=1}^{n} u_i v_{n-i}
    PowerSeries v(order());
    v.coeffs_[0] = IntPoly(1);
    for (std::size_t n = 1; n <= order(); ++n) {
        IntPoly acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!coeffs_[i].is_zero()) {
                acc -= coeffs_[i] * v.coeffs_[n - i];
            }
        }
        v.coeffs_[n] = std::move(acc);
    }
    return v;
}

PowerSeries PowerSeries::at_q(const BigInt& q) const {
    PowerSeries r(order());
    for (std::size_t n = 0; n <= order(); ++n) {
        r.coeffs_[n] = IntPoly(coeffs_[n].eval(q));
    }
    return r;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    return PowerSeries(order, std::vector<IntPoly>(coeffs_.begin(),
                                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                         std::min(order + 1, coeffs_.size()))));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    if (rhs.order() != order()) {
        throw DomainError("series orders differ");
    }
    for (std::size_t n = 0; n <= order(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    if (rhs.order() != order()) {
        throw DomainError("series orders differ");
    }
    for (std::size_t n = 0; n <= order(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

PowerSeries& PowerSeries::operator*=(const IntPoly& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) {
        throw DomainError("series orders differ");
    }
    PowerSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= a.order(); ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

nlohmann::json to_json(const PowerSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.coeffs()) {
        arr.push_back(to_json(c));
    }
    return nlohmann::json{{"order", s.order()}, {"coeffs", std::move(arr)}};
}

} // namespace genocchi
