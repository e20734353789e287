#pragma once

#include "genocchi/int_poly.hpp"

#include <vector>

namespace genocchi {

/// Power series in s with Z[q] coefficients, truncated after s^order.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order);
    PowerSeries(std::size_t order, std::vector<IntPoly> coeffs);
    /// The constant series c.
    static PowerSeries constant(IntPoly c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<IntPoly>& coeffs() const noexcept { return coeffs_; }
    const IntPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
    IntPoly& operator[](std::size_t n) { return coeffs_.at(n); }

    /// Multiply by s^k, dropping terms past the order.
    PowerSeries shifted(std::size_t k) const;
    /// Multiplicative inverse; the constant term must be exactly 1.
    PowerSeries inverse() const;
    /// Substitute an integer for q in every coefficient.
    PowerSeries at_q(const BigInt& q) const;
    PowerSeries truncated(std::size_t order) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const IntPoly& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const IntPoly& c) { return a *= c; }
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<IntPoly> coeffs_;
};

/// {"order":N,"coeffs":[{"coeffs":[...]}, ...]}
nlohmann::json to_json(const PowerSeries& s);

} // namespace genocchi
