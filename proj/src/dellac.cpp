#include "genocchi/dellac.hpp"

#include "genocchi/errors.hpp"
#include "genocchi/limits.hpp"

#include <sstream>

namespace genocchi {

namespace {

// Highest row column l may mark. GENOCCHI_MUTATE_DELLAC_WINDOW narrows the
// band by one; it exists only for the mutation-sensitivity build.
constexpr int band_top(int n, int l) {
#ifdef GENOCCHI_MUTATE_DELLAC_WINDOW
    return n + l - 1;
#else
    return n + l;
#endif
}

class DellacSearch {
public:
    DellacSearch(int n, const DellacVisitor& visit)
        : n_(n), visit_(visit), used_(static_cast<std::size_t>(2 * n + 1), false) {
        config_.n = n;
        config_.columns.resize(static_cast<std::size_t>(n));
    }

    std::uint64_t run() {
        place(1);
        return count_;
    }

private:
    void place(int l) {
        if (l > n_) {
            ++count_;
            if (visit_) {
                visit_(config_);
            }
            return;
        }
        const int top = band_top(n_, l);
        for (int lo = l; lo <= top; ++lo) {
            if (used_[lo]) {
                continue;
            }
            used_[lo] = true;
            for (int hi = lo + 1; hi <= top; ++hi) {
                if (used_[hi]) {
                    continue;
                }
                used_[hi] = true;
                // Row l is outside every later column's band.
                if (used_[l]) {
                    config_.columns[static_cast<std::size_t>(l - 1)] = {lo, hi};
                    place(l + 1);
                }
                used_[hi] = false;
            }
            used_[lo] = false;
        }
    }

    int n_;
    const DellacVisitor& visit_;
    std::vector<bool> used_;
    DellacConfig config_;
    std::uint64_t count_ = 0;
};

} // namespace

BigInt enumerate_dellac(int n, const DellacVisitor& visit) {
    if (n < 1) {
        throw DomainError("enumerate_dellac: n must be positive");
    }
    require_within_limit(Model::Dellac, n);
    return DellacSearch(n, visit).run();
}

std::vector<DellacConfig> collect_dellac(int n) {
    std::vector<DellacConfig> out;
    enumerate_dellac(n, [&](const DellacConfig& d) { out.push_back(d); });
    return out;
}

int dellac_length(const DellacConfig& d) {
    int inversions = 0;
    const auto& cols = d.columns;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        for (std::size_t b = a + 1; b < cols.size(); ++b) {
            for (int j1 : {cols[a].first, cols[a].second}) {
                for (int j2 : {cols[b].first, cols[b].second}) {
                    if (j1 > j2) {
                        ++inversions;
                    }
                }
            }
        }
    }
    return inversions;
}

bool is_valid_dellac(const DellacConfig& d) {
    if (d.n < 1 || d.columns.size() != static_cast<std::size_t>(d.n)) {
        return false;
    }
    std::vector<int> hits(static_cast<std::size_t>(2 * d.n + 1), 0);
    for (int l = 1; l <= d.n; ++l) {
        auto [lo, hi] = d.columns[static_cast<std::size_t>(l - 1)];
        if (!(lo < hi) || lo < l || hi > d.n + l) {
            return false;
        }
        ++hits[lo];
        ++hits[hi];
    }
    for (int j = 1; j <= 2 * d.n; ++j) {
        if (hits[j] != 1) {
            return false;
        }
    }
    return true;
}

IntPoly h_poly_dellac(int n) {
    std::vector<std::uint64_t> by_length;
    enumerate_dellac(n, [&](const DellacConfig& d) {
        const auto len = static_cast<std::size_t>(dellac_length(d));
        if (by_length.size() <= len) {
            by_length.resize(len + 1, 0);
        }
        ++by_length[len];
    });
    return IntPoly(std::vector<BigInt>(by_length.begin(), by_length.end()));
}

std::string to_text(const DellacConfig& d) {
    std::ostringstream os;
    for (int l = 1; l <= d.n; ++l) {
        const auto& [lo, hi] = d.columns[static_cast<std::size_t>(l - 1)];
        os << l << ": " << lo << ' ' << hi << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const DellacConfig& d) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& [lo, hi] : d.columns) {
        cols.push_back({lo, hi});
    }
    return nlohmann::json{{"n", d.n}, {"columns", std::move(cols)}};
}

} // namespace genocchi
