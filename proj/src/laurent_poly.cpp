#include "genocchi/laurent_poly.hpp"

#include "genocchi/errors.hpp"

namespace genocchi {

LaurentPoly::LaurentPoly(IntPoly body, long offset) : offset_(offset), body_(std::move(body)) {
    canonicalize();
}

void LaurentPoly::canonicalize() {
    if (body_.is_zero()) {
        offset_ = 0;
        return;
    }
    const auto& c = body_.coeffs();
    std::size_t low = 0;
    while (c[low] == 0) {
        ++low;
    }
    if (low != 0) {
        body_ = IntPoly(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
        offset_ += static_cast<long>(low);
    }
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) {
        r.offset_ += k;
    }
    return r;
}

IntPoly LaurentPoly::to_poly() const {
    if (offset_ < 0) {
        throw DomainError("Laurent polynomial has a negative exponent q^" + std::to_string(offset_));
    }
    return body_.shifted(static_cast<std::size_t>(offset_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    const long low = std::min(offset_, rhs.offset_);
    body_ = body_.shifted(static_cast<std::size_t>(offset_ - low)) +
            rhs.body_.shifted(static_cast<std::size_t>(rhs.offset_ - low));
    offset_ = low;
    canonicalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    body_ *= rhs.body_;
    offset_ += rhs.offset_;
    canonicalize();
    return *this;
}

std::string to_string(const LaurentPoly& p) {
    if (p.offset() == 0) {
        return to_string(p.body());
    }
    return "q^" + std::to_string(p.offset()) + " * (" + to_string(p.body()) + ")";
}

} // namespace genocchi
