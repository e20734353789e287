#include "genocchi/seidel.hpp"

#include "genocchi/errors.hpp"
#include "genocchi/limits.hpp"

#include <memory>
#include <mutex>

namespace genocchi {

SeidelTriangle::SeidelTriangle(std::size_t columns) {
    if (columns == 0) {
        throw DomainError("Seidel triangle needs at least one column");
    }
    require_within_limit(Model::Seidel, static_cast<long>(columns));
    columns_.reserve(columns);
    columns_.push_back({BigInt(1)});
    for (std::size_t n = 2; n <= columns; ++n) {
        columns_.push_back(next_column(columns_.back(), n));
    }
}

std::vector<BigInt> SeidelTriangle::next_column(const std::vector<BigInt>& prev, std::size_t n) {
    if (n < 2) {
        throw DomainError("next_column: n must be at least 2");
    }
    const std::size_t height = (n + 1) / 2;
    std::vector<BigInt> col(height);
    if (n % 2 == 0) {
        // suffix sums, top down
        BigInt acc = 0;
        for (std::size_t k = height; k-- > 0;) {
            if (k < prev.size()) {
                acc += prev[k];
            }
            col[k] = acc;
        }
    } else {
        BigInt acc = 0;
        for (std::size_t k = 0; k < height; ++k) {
            if (k < prev.size()) {
                acc += prev[k];
            }
            col[k] = acc;
        }
    }
    return col;
}

const std::vector<BigInt>& SeidelTriangle::column(std::size_t n) const {
    if (n == 0 || n > columns_.size()) {
        throw DomainError("Seidel column " + std::to_string(n) + " out of range");
    }
    return columns_[n - 1];
}

const BigInt& SeidelTriangle::entry(std::size_t k, std::size_t n) const {
    const auto& col = column(n);
    if (k == 0 || k > col.size()) {
        throw DomainError("Seidel row " + std::to_string(k) + " out of range in column " +
                          std::to_string(n));
    }
    return col[k - 1];
}

SeidelTriangle build_triangle(std::size_t columns) { return SeidelTriangle(columns); }

namespace {

// Shared immutable triangle, replaced by a larger one when a query needs it.
std::shared_ptr<const SeidelTriangle> triangle_with(std::size_t columns) {
    static std::mutex mutex;
    static std::shared_ptr<const SeidelTriangle> cached;
    std::lock_guard lock(mutex);
    if (!cached || cached->columns() < columns) {
        cached = std::make_shared<const SeidelTriangle>(columns);
    }
    return cached;
}

void require_positive(std::size_t n, const char* what) {
    if (n == 0) {
        throw DomainError(std::string(what) + ": n must be positive");
    }
}

} // namespace

BigInt genocchi_first(std::size_t n) {
    require_positive(n, "genocchi_first");
    return triangle_with(2 * n - 1)->entry(n, 2 * n - 1);
}

BigInt median_genocchi(std::size_t n) {
    require_positive(n, "median_genocchi");
    return triangle_with(2 * n)->entry(1, 2 * n);
}

BigInt normalized_h(std::size_t n) {
    const BigInt big_h = median_genocchi(n + 1);
    const BigInt power = BigInt(1) << n;
    if (big_h % power != 0) {
        throw InternalInconsistency("H_" + std::to_string(2 * n + 1) + " is not divisible by 2^" +
                                    std::to_string(n));
    }
    return big_h / power;
}

} // namespace genocchi
