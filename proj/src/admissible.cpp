#include "genocchi/admissible.hpp"

#include "genocchi/errors.hpp"
#include "genocchi/limits.hpp"

#include <bit>
#include <sstream>

namespace genocchi {

namespace {

SubsetMask bit_of(int j) { return SubsetMask{1} << (j - 1); }

// Submasks of `universe` with `size` bits, ascending.
std::vector<SubsetMask> submasks_of_size(SubsetMask universe, int size) {
    std::vector<SubsetMask> out;
    // Ascending enumeration of submasks: walk down from universe and reverse.
    for (SubsetMask s = universe;; s = (s - 1) & universe) {
        if (std::popcount(s) == size) {
            out.push_back(s);
        }
        if (s == 0) {
            break;
        }
    }
    return {out.rbegin(), out.rend()};
}

class AdmissibleSearch {
public:
    AdmissibleSearch(int n, const AdmissibleVisitor& visit) : n_(n), visit_(visit) {
        seq_.n = n;
        seq_.sets.resize(static_cast<std::size_t>(n - 1));
    }

    std::uint64_t run() {
        if (n_ == 1) {
            emit();
            return count_;
        }
        const SubsetMask full = (SubsetMask{1} << n_) - 1;
        for (SubsetMask top : submasks_of_size(full, n_ - 1)) {
            seq_.sets.back() = top;
            descend(n_ - 2);
        }
        return count_;
    }

private:
    // Fill I_l given I_{l+1}.
    void descend(int l) {
        if (l == 0) {
            emit();
            return;
        }
        const SubsetMask allowed = seq_.sets[static_cast<std::size_t>(l)] | bit_of(l + 1);
        for (SubsetMask cand : submasks_of_size(allowed, l)) {
            seq_.sets[static_cast<std::size_t>(l - 1)] = cand;
            descend(l - 1);
        }
    }

    void emit() {
        ++count_;
        if (visit_) {
            visit_(seq_);
        }
    }

    int n_;
    const AdmissibleVisitor& visit_;
    AdmissibleSequence seq_;
    std::uint64_t count_ = 0;
};

} // namespace

BigInt enumerate_admissible(int n, const AdmissibleVisitor& visit) {
    if (n < 1) {
        throw DomainError("enumerate_admissible: n must be positive");
    }
    require_within_limit(Model::Admissible, n);
    return AdmissibleSearch(n, visit).run();
}

bool is_admissible(const AdmissibleSequence& seq) {
    if (seq.n < 1 || seq.n > 64 || seq.sets.size() != static_cast<std::size_t>(seq.n - 1)) {
        return false;
    }
    const SubsetMask full = seq.n == 64 ? ~SubsetMask{0} : (SubsetMask{1} << seq.n) - 1;
    for (int l = 1; l <= seq.n - 1; ++l) {
        const SubsetMask s = seq.sets[static_cast<std::size_t>(l - 1)];
        if ((s & ~full) != 0 || std::popcount(s) != l) {
            return false;
        }
        if (l <= seq.n - 2) {
            const SubsetMask next = seq.sets[static_cast<std::size_t>(l)] | bit_of(l + 1);
            if ((s & ~next) != 0) {
                return false;
            }
        }
    }
    return true;
}

GammaGraph::GammaGraph(int n) : n_(n) {
    if (n < 1) {
        throw DomainError("GammaGraph: n must be positive");
    }
}

bool GammaGraph::contains(GammaVertex v) const noexcept {
    return v.l >= 1 && v.l <= n_ - 1 && v.j >= 1 && v.j <= n_;
}

std::optional<GammaVertex> GammaGraph::successor(GammaVertex v) const {
    if (!contains(v)) {
        throw DomainError("vertex (" + std::to_string(v.l) + "," + std::to_string(v.j) +
                          ") is not in Gamma_" + std::to_string(n_));
    }
    if (v.l + 1 <= n_ - 1 && v.l + 1 != v.j) {
        return GammaVertex{v.l + 1, v.j};
    }
    return std::nullopt;
}

int GammaGraph::out_degree(GammaVertex v) const { return successor(v) ? 1 : 0; }

bool is_closed_in_gamma(std::span<const GammaVertex> s, const GammaGraph& g) {
    std::vector<SubsetMask> by_column(static_cast<std::size_t>(g.n() + 1), 0);
    for (const auto& v : s) {
        if (!g.contains(v)) {
            throw DomainError("vertex (" + std::to_string(v.l) + "," + std::to_string(v.j) +
                              ") is not in Gamma_" + std::to_string(g.n()));
        }
        by_column[static_cast<std::size_t>(v.l)] |= bit_of(v.j);
    }
    for (const auto& v : s) {
        if (auto next = g.successor(v)) {
            if ((by_column[static_cast<std::size_t>(next->l)] & bit_of(next->j)) == 0) {
                return false;
            }
        }
    }
    return true;
}

std::vector<GammaVertex> gamma_subset(const AdmissibleSequence& seq) {
    std::vector<GammaVertex> out;
    for (int l = 1; l <= seq.n - 1; ++l) {
        for (int j : mask_elements(seq.sets[static_cast<std::size_t>(l - 1)])) {
            out.push_back({l, j});
        }
    }
    return out;
}

namespace {

class ClosedSubsetCounter {
public:
    explicit ClosedSubsetCounter(int n) : g_(n), chosen_(static_cast<std::size_t>(n), 0) {}

    std::uint64_t run() {
        if (g_.n() == 1) {
            return 1;
        }
        const SubsetMask full = (SubsetMask{1} << g_.n()) - 1;
        candidates_.resize(static_cast<std::size_t>(g_.n()));
        for (int l = 1; l <= g_.n() - 1; ++l) {
            candidates_[static_cast<std::size_t>(l)] = submasks_of_size(full, l);
        }
        extend(1);
        return count_;
    }

private:
    // Choose column l; arrows from column l-1 into column l must land inside.
    void extend(int l) {
        if (l == g_.n()) {
            ++count_;
            return;
        }
        for (SubsetMask cand : candidates_[static_cast<std::size_t>(l)]) {
            if (l > 1 && !arrows_land_in(l - 1, cand)) {
                continue;
            }
            chosen_[static_cast<std::size_t>(l)] = cand;
            extend(l + 1);
        }
    }

    bool arrows_land_in(int from_column, SubsetMask target) const {
        const SubsetMask src = chosen_[static_cast<std::size_t>(from_column)];
        for (int j = 1; j <= g_.n(); ++j) {
            if ((src & bit_of(j)) == 0) {
                continue;
            }
            if (auto next = g_.successor({from_column, j}); next && (target & bit_of(next->j)) == 0) {
                return false;
            }
        }
        return true;
    }

    GammaGraph g_;
    std::vector<SubsetMask> chosen_;
    std::vector<std::vector<SubsetMask>> candidates_;
    std::uint64_t count_ = 0;
};

} // namespace

BigInt count_closed_column_graded(int n) {
    if (n < 1) {
        throw DomainError("count_closed_column_graded: n must be positive");
    }
    require_within_limit(Model::ClosedSubsets, n);
    return ClosedSubsetCounter(n).run();
}

std::vector<int> mask_elements(SubsetMask m) {
    std::vector<int> out;
    for (int j = 1; m != 0; ++j, m >>= 1) {
        if (m & 1u) {
            out.push_back(j);
        }
    }
    return out;
}

nlohmann::json to_json(const AdmissibleSequence& seq) {
    nlohmann::json sets = nlohmann::json::array();
    for (SubsetMask s : seq.sets) {
        sets.push_back(mask_elements(s));
    }
    return nlohmann::json{{"n", seq.n}, {"sets", std::move(sets)}};
}

std::string to_text(const AdmissibleSequence& seq) {
    if (seq.sets.empty()) {
        return "()";
    }
    std::ostringstream os;
    for (std::size_t l = 0; l < seq.sets.size(); ++l) {
        if (l != 0) {
            os << ' ';
        }
        os << '{';
        const auto elems = mask_elements(seq.sets[l]);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            os << (i ? "," : "") << elems[i];
        }
        os << '}';
    }
    return os.str();
}

} // namespace genocchi
