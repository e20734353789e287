#include "genocchi/int_poly.hpp"

#include "genocchi/errors.hpp"

#include <algorithm>
#include <sstream>

namespace genocchi {

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) {
        coeffs_.push_back(std::move(constant));
    }
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPoly IntPoly::monomial(BigInt c, std::size_t exponent) {
    if (c == 0) {
        return {};
    }
    std::vector<BigInt> v(exponent + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::geometric(std::size_t n, std::size_t step) {
    if (n == 0) {
        return {};
    }
    std::vector<BigInt> v((n - 1) * step + 1);
    for (std::size_t i = 0; i < n; ++i) {
        v[i * step] = 1;
    }
    return IntPoly(std::move(v));
}

std::size_t IntPoly::degree() const {
    if (coeffs_.empty()) {
        throw DomainError("degree of the zero polynomial is undefined");
    }
    return coeffs_.size() - 1;
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPoly::leading() const {
    if (coeffs_.empty()) {
        throw DomainError("leading coefficient of the zero polynomial is undefined");
    }
    return coeffs_.back();
}

BigInt IntPoly::eval(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) {
        return *this;
    }
    std::vector<BigInt> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    IntPoly r;
    r.coeffs_ = std::move(v);
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result(1);
    IntPoly base = *this;
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

bool IntPoly::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (auto& x : a.coeffs_) {
        x = -x;
    }
    return a;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPoly poly_reverse(const IntPoly& p, std::size_t d) {
    if (p.is_zero()) {
        return {};
    }
    if (p.degree() > d) {
        throw DomainError("poly_reverse: degree " + std::to_string(p.degree()) + " exceeds " +
                          std::to_string(d));
    }
    std::vector<BigInt> v(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        v[i] = p.coeff(d - i);
    }
    return IntPoly(std::move(v));
}

IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) {
        throw DomainError("poly_exact_div: division by the zero polynomial");
    }
    if (num.is_zero()) {
        return {};
    }
    const std::size_t dn = den.degree();
    if (num.degree() < dn) {
        throw InexactDivision("poly_exact_div: " + to_string(num) + " is not divisible by " +
                              to_string(den));
    }
    std::vector<BigInt> rem = num.coeffs();
    const BigInt& lead = den.coeffs().back();
    std::vector<BigInt> quot(num.degree() - dn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = rem[k + dn];
        if (top == 0) {
            continue;
        }
        BigInt r;
        BigInt qk;
        boost::multiprecision::divide_qr(top, lead, qk, r);
        if (r != 0) {
            throw InexactDivision("poly_exact_div: " + to_string(num) + " is not divisible by " +
                                  to_string(den));
        }
        for (std::size_t i = 0; i <= dn; ++i) {
            rem[k + i] -= qk * den.coeffs()[i];
        }
        quot[k] = std::move(qk);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
        throw InexactDivision("poly_exact_div: " + to_string(num) + " is not divisible by " +
                              to_string(den));
    }
    return IntPoly(std::move(quot));
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        BigInt c = p.coeffs()[i];
        if (c == 0) {
            continue;
        }
        bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) {
            os << c << '*';
        }
        os << 'q';
        if (i > 1) {
            os << '^' << i;
        }
    }
    return os.str();
}

nlohmann::json to_json(const IntPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.str());
    }
    return nlohmann::json{{"coeffs", std::move(arr)}};
}

BigInt parse_bigint(const std::string& text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size() ||
        !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw DomainError("not a decimal integer: '" + text + "'");
    }
    return BigInt(text[0] == '+' ? text.substr(1) : text);
}

IntPoly intpoly_from_json(const nlohmann::json& j) {
    const nlohmann::json& arr = j.is_object() ? j.at("coeffs") : j;
    if (!arr.is_array()) {
        throw DomainError("polynomial JSON must be an array or {\"coeffs\":[...]}");
    }
    std::vector<BigInt> v;
    v.reserve(arr.size());
    for (const auto& c : arr) {
        if (c.is_string()) {
            v.push_back(parse_bigint(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            v.emplace_back(c.get<long long>());
        } else {
            throw DomainError("polynomial coefficient must be an integer or decimal string");
        }
    }
    return IntPoly(std::move(v));
}

} // namespace genocchi
