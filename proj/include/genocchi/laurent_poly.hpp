#pragma once

#include "genocchi/int_poly.hpp"

namespace genocchi {

/// q^offset * body. Canonical: body has a nonzero constant term, or the
/// polynomial is zero with offset 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(BigInt constant) : LaurentPoly(IntPoly(std::move(constant))) {}
    explicit LaurentPoly(IntPoly body, long offset = 0);

    long offset() const noexcept { return offset_; }
    const IntPoly& body() const noexcept { return body_; }
    bool is_zero() const noexcept { return body_.is_zero(); }

    /// Multiply by q^k (k may be negative).
    LaurentPoly shifted(long k) const;
    /// The IntPoly this equals; DomainError if a negative exponent survives.
    IntPoly to_poly() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void canonicalize();

    long offset_ = 0;
    IntPoly body_;
};

std::string to_string(const LaurentPoly& p);

} // namespace genocchi
