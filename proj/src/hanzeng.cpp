#include "genocchi/hanzeng.hpp"

#include "genocchi/errors.hpp"
#include "genocchi/limits.hpp"

#include <mutex>
#include <vector>

namespace genocchi {

namespace {

// 1 + qx
BivarPoly one_plus_qx() { return BivarPoly(std::vector<IntPoly>{IntPoly(1), IntPoly{0, 1}}); }

// 1 + (q-1)x
BivarPoly recurrence_divisor() { return BivarPoly(std::vector<IntPoly>{IntPoly(1), IntPoly{-1, 1}}); }

BivarPoly next_C(const BivarPoly& prev, int n) {
    const BivarPoly a = one_plus_qx();
    const BivarPoly numerator = a * substitute_x(prev, a) - BivarPoly::x() * prev;
    try {
        return a * bivar_exact_div_by_unit_const(numerator, recurrence_divisor());
    } catch (const InexactDivision& e) {
        throw InternalInconsistency("Han-Zeng recurrence step n=" + std::to_string(n) +
                                    " is not exact: " + e.what());
    }
}

class HanZengMemo {
public:
    BivarPoly get(int n) {
        std::lock_guard lock(mutex_);
        if (memo_.empty()) {
            memo_.emplace_back(IntPoly(1));
        }
        while (static_cast<int>(memo_.size()) < n) {
            memo_.push_back(next_C(memo_.back(), static_cast<int>(memo_.size()) + 1));
        }
        return memo_[static_cast<std::size_t>(n - 1)];
    }

private:
    std::mutex mutex_;
    std::vector<BivarPoly> memo_;
};

HanZengMemo& memo() {
    static HanZengMemo m;
    return m;
}

} // namespace

BivarPoly hanzeng_C(int n) {
    if (n < 1) {
        throw DomainError("hanzeng_C: n must be positive");
    }
    require_within_limit(Model::HanZeng, n);
    return memo().get(n);
}

IntPoly hanzeng_barc(int n) {
    const IntPoly at_one = hanzeng_C(n).evaluate_x(IntPoly(1));
    try {
        return poly_exact_div(at_one, IntPoly{1, 1}.pow(static_cast<unsigned>(n - 1)));
    } catch (const InexactDivision& e) {
        throw InternalInconsistency("C_" + std::to_string(n) + "(1,q) is not divisible by (1+q)^" +
                                    std::to_string(n - 1) + ": " + e.what());
    }
}

} // namespace genocchi
