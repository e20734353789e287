#include "genocchi/qbinomial.hpp"

#include "genocchi/errors.hpp"

#include <mutex>
#include <vector>

namespace genocchi {

namespace {

// Rows of the q-Pascal triangle, grown on demand.
class QBinomialTable {
public:
    IntPoly get(std::size_t m, std::size_t n) {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= m) {
            extend();
        }
        return rows_[m][n];
    }

private:
    void extend() {
        const std::size_t m = rows_.size();
        std::vector<IntPoly> row(m + 1);
        row[0] = IntPoly(1);
        row[m] = IntPoly(1);
        for (std::size_t n = 1; n < m; ++n) {
            row[n] = rows_[m - 1][n - 1] + rows_[m - 1][n].shifted(n);
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<IntPoly>> rows_;
};

QBinomialTable& table() {
    static QBinomialTable t;
    return t;
}

} // namespace

IntPoly q_integer(std::size_t n) { return IntPoly::geometric(n); }

IntPoly q_factorial(std::size_t n) {
    IntPoly r(1);
    for (std::size_t i = 2; i <= n; ++i) {
        r *= q_integer(i);
    }
    return r;
}

IntPoly q_binomial(std::size_t m, std::size_t n) {
    if (n > m) {
        throw DomainError("q_binomial: n=" + std::to_string(n) + " exceeds m=" + std::to_string(m));
    }
    return table().get(m, n);
}

BigInt binomial(std::size_t m, std::size_t n) {
    if (n > m) {
        return 0;
    }
    BigInt r = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        r = r * (m - n + i) / i;
    }
    return r;
}

} // namespace genocchi
