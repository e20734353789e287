#pragma once

// Dense univariate polynomials in q with arbitrary-precision integer
// coefficients. Coefficients are stored in ascending order with no trailing
// zeros; the zero polynomial has an empty coefficient list.

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace genocchi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(BigInt constant);
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    /// c * q^exponent
    static IntPoly monomial(BigInt c, std::size_t exponent);
    /// 1 + q + ... + q^(n-1); zero for n = 0.
    static IntPoly geometric(std::size_t n, std::size_t step = 1);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws DomainError on the zero polynomial.
    std::size_t degree() const;
    /// Coefficient of q^i, zero past the degree.
    BigInt coeff(std::size_t i) const;
    BigInt leading() const;
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    BigInt eval(const BigInt& q) const;
    /// Multiply by q^k.
    IntPoly shifted(std::size_t k) const;
    IntPoly pow(unsigned e) const;
    bool is_palindromic() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
    friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// q^d * p(1/q). Requires degree(p) <= d.
IntPoly poly_reverse(const IntPoly& p, std::size_t d);

/// Quotient of an exact division over Z[q]; InexactDivision otherwise.
IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den);

/// "c0 + c1*q + c2*q^2 + ...", zero terms omitted, unit coefficients elided.
std::string to_string(const IntPoly& p);

/// {"coeffs":["c0","c1",...]}
nlohmann::json to_json(const IntPoly& p);
/// Accepts the to_json shape; coefficients may be strings or integers.
IntPoly intpoly_from_json(const nlohmann::json& j);

BigInt parse_bigint(const std::string& text);

} // namespace genocchi
