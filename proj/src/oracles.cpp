#include "genocchi/oracles.hpp"

#include "genocchi/errors.hpp"
#include "genocchi/limits.hpp"

#include <cstdint>

namespace genocchi {

bool is_valid_triangle_pair(const TrianglePair& t) {
    const int n = t.n;
    auto in_range = [n](const std::pair<int, int>& ij) {
        return ij.first >= 1 && ij.first <= ij.second && ij.second <= n;
    };
    for (const auto* arr : {&t.r, &t.m}) {
        for (const auto& [ij, v] : *arr) {
            if (!in_range(ij) || v < 0) {
                return false;
            }
        }
    }
    auto get = [](const std::map<std::pair<int, int>, int>& a, int i, int j) {
        auto it = a.find({i, j});
        return it == a.end() ? 0 : it->second;
    };
    for (int k = 1; k <= n; ++k) {
        int row = 0;
        for (int i = k; i <= n; ++i) {
            row += get(t.r, k, i);
        }
        int col = 0;
        for (int j = 1; j <= k; ++j) {
            col += get(t.m, j, k);
        }
        if (row > 1 || col > 1) {
            return false;
        }
        int r_cover = 0;
        int m_cover = 0;
        for (int i = 1; i <= k; ++i) {
            for (int j = k; j <= n; ++j) {
                r_cover += get(t.r, i, j);
                m_cover += get(t.m, i, j);
            }
        }
        if (r_cover != m_cover) {
            return false;
        }
    }
    return true;
}

namespace {

class DumontSearch {
public:
    explicit DumontSearch(int n)
        : n_(n), size_(2 * n + 2), value_at_(static_cast<std::size_t>(size_ + 1), 0),
          used_(static_cast<std::size_t>(size_ + 1), false) {}

    std::uint64_t run() {
        fill(1);
        return count_;
    }

private:
    void fill(int k) {
        if (k > size_) {
            if (inverse_order_holds()) {
                ++count_;
            }
            return;
        }
        // Parity condition prunes each prefix as soon as it is violated.
        const bool even = k % 2 == 0;
        const int lo = even ? 1 : k + 1;
        const int hi = even ? k - 1 : size_;
        for (int v = lo; v <= hi; ++v) {
            if (used_[v]) {
                continue;
            }
            used_[v] = true;
            value_at_[k] = v;
            fill(k + 1);
            used_[v] = false;
        }
    }

    bool inverse_order_holds() const {
        std::vector<int> pos(static_cast<std::size_t>(size_ + 1));
        for (int k = 1; k <= size_; ++k) {
            pos[value_at_[k]] = k;
        }
        for (int k = 1; k <= n_; ++k) {
            if (!(pos[2 * k] < pos[2 * k + 1])) {
                return false;
            }
        }
        return true;
    }

    int n_;
    int size_;
    std::vector<int> value_at_;
    std::vector<bool> used_;
    std::uint64_t count_ = 0;
};

// Coverage profile: entry k-1 counts the marked intervals [i, j] containing k.
using Profile = std::vector<int>;

// Every filling with at most one mark per "line" (row of r, column of m),
// expressed as the intervals it marks; calls emit with the coverage profile.
template <typename Emit>
void for_each_filling(int n, bool rows_of_r, Emit&& emit) {
    Profile cover(static_cast<std::size_t>(n), 0);
    // line k chooses nothing or one interval: r uses [k, j] for j >= k,
    // m uses [i, k] for i <= k.
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            emit(cover);
            return;
        }
        self(self, k + 1);
        const int first = rows_of_r ? k : 1;
        const int last = rows_of_r ? n : k;
        for (int other = first; other <= last; ++other) {
            const int i = rows_of_r ? k : other;
            const int j = rows_of_r ? other : k;
            for (int c = i; c <= j; ++c) {
                ++cover[static_cast<std::size_t>(c - 1)];
            }
            self(self, k + 1);
            for (int c = i; c <= j; ++c) {
                --cover[static_cast<std::size_t>(c - 1)];
            }
        }
    };
    rec(rec, 1);
}

} // namespace

BigInt count_dumont(int n) {
    if (n < 1) {
        throw DomainError("count_dumont: n must be positive");
    }
    require_within_limit(Model::Dumont, n);
    return DumontSearch(n).run();
}

BigInt count_triangle_pairs(int n) {
    if (n < 1) {
        throw DomainError("count_triangle_pairs: n must be positive");
    }
    require_within_limit(Model::TrianglePairs, n);
    // The balance condition only compares coverage profiles, so pair every r
    // filling with every m filling of the same profile.
    std::map<Profile, std::uint64_t> m_profiles;
    for_each_filling(n, false, [&](const Profile& p) { ++m_profiles[p]; });
    std::uint64_t total = 0;
    for_each_filling(n, true, [&](const Profile& p) {
        if (auto it = m_profiles.find(p); it != m_profiles.end()) {
            total += it->second;
        }
    });
    return total;
}

} // namespace genocchi
