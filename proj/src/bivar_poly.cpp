#include "genocchi/bivar_poly.hpp"

#include "genocchi/errors.hpp"

namespace genocchi {

BivarPoly::BivarPoly(IntPoly constant) {
    if (!constant.is_zero()) {
        x_coeffs_.push_back(std::move(constant));
    }
}

BivarPoly::BivarPoly(std::vector<IntPoly> x_coeffs) : x_coeffs_(std::move(x_coeffs)) { trim(); }

BivarPoly BivarPoly::x() { return BivarPoly(std::vector<IntPoly>{IntPoly{}, IntPoly(1)}); }

IntPoly BivarPoly::x_coeff(std::size_t i) const {
    return i < x_coeffs_.size() ? x_coeffs_[i] : IntPoly{};
}

IntPoly BivarPoly::evaluate_x(const IntPoly& value) const {
    IntPoly acc;
    for (auto it = x_coeffs_.rbegin(); it != x_coeffs_.rend(); ++it) {
        acc = acc * value + *it;
    }
    return acc;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    if (rhs.x_coeffs_.size() > x_coeffs_.size()) {
        x_coeffs_.resize(rhs.x_coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.x_coeffs_.size(); ++i) {
        x_coeffs_[i] += rhs.x_coeffs_[i];
    }
    trim();
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    if (rhs.x_coeffs_.size() > x_coeffs_.size()) {
        x_coeffs_.resize(rhs.x_coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.x_coeffs_.size(); ++i) {
        x_coeffs_[i] -= rhs.x_coeffs_[i];
    }
    trim();
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<IntPoly> v(a.x_coeffs_.size() + b.x_coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.x_coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.x_coeffs_.size(); ++j) {
            v[i + j] += a.x_coeffs_[i] * b.x_coeffs_[j];
        }
    }
    return BivarPoly(std::move(v));
}

void BivarPoly::trim() {
    while (!x_coeffs_.empty() && x_coeffs_.back().is_zero()) {
        x_coeffs_.pop_back();
    }
}

BivarPoly substitute_x(const BivarPoly& p, const BivarPoly& s) {
    BivarPoly acc;
    for (auto it = p.x_coeffs().rbegin(); it != p.x_coeffs().rend(); ++it) {
        acc = acc * s + BivarPoly(*it);
    }
    return acc;
}

BivarPoly bivar_exact_div_by_unit_const(const BivarPoly& num, const BivarPoly& den) {
    if (den.x_coeff(0) != IntPoly(1)) {
        throw DomainError("bivar_exact_div_by_unit_const: divisor must have x-constant term 1");
    }
    if (num.is_zero()) {
        return {};
    }
    const std::size_t num_len = num.x_coeffs().size();
    const std::size_t den_len = den.x_coeffs().size();
    if (num_len < den_len) {
        throw InexactDivision("bivar_exact_div_by_unit_const: x-degree of numerator too small");
    }
    // Q_i = N_i - sum_{j>=1} D_j Q_{i-j}; D_0 = 1 makes every step division-free.
    std::vector<IntPoly> quot(num_len - den_len + 1);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        IntPoly qi = num.x_coeff(i);
        for (std::size_t j = 1; j < den_len && j <= i; ++j) {
            qi -= den.x_coeffs()[j] * quot[i - j];
        }
        quot[i] = std::move(qi);
    }
    BivarPoly q(std::move(quot));
    if (q * den != num) {
        throw InexactDivision("bivar_exact_div_by_unit_const: nonzero remainder");
    }
    return q;
}

std::string to_string(const BivarPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.x_coeffs().size(); ++i) {
        const IntPoly& c = p.x_coeffs()[i];
        if (c.is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(c) + ")";
        if (i == 1) {
            out += "*x";
        } else if (i > 1) {
            out += "*x^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace genocchi
