#pragma once

#include "genocchi/int_poly.hpp"

#include <vector>

namespace genocchi {

/// Polynomial in x with coefficients in Z[q]; x_coeffs()[i] multiplies x^i.
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(IntPoly constant);
    explicit BivarPoly(std::vector<IntPoly> x_coeffs);

    /// The variable x.
    static BivarPoly x();

    const std::vector<IntPoly>& x_coeffs() const noexcept { return x_coeffs_; }
    bool is_zero() const noexcept { return x_coeffs_.empty(); }
    /// Coefficient of x^i, zero past the x-degree.
    IntPoly x_coeff(std::size_t i) const;

    /// Substitute a polynomial in q for x.
    IntPoly evaluate_x(const IntPoly& value) const;

    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    void trim();

    std::vector<IntPoly> x_coeffs_;
};

/// p(s(x, q), q): composes p with x -> s, leaving q alone.
BivarPoly substitute_x(const BivarPoly& p, const BivarPoly& s);

/// Exact quotient num / den computed ascending in x. The x-constant term of
/// den must be the constant polynomial 1 (DomainError otherwise); a nonzero
/// remainder raises InexactDivision.
BivarPoly bivar_exact_div_by_unit_const(const BivarPoly& num, const BivarPoly& den);

std::string to_string(const BivarPoly& p);

} // namespace genocchi
