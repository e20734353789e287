#pragma once

#include "genocchi/int_poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace genocchi {

/// Subset of {1..n} as a bitmask; bit j-1 stands for element j.
using SubsetMask = std::uint64_t;

/// (I_1, ..., I_{n-1}) with |I_l| = l and I_l contained in I_{l+1} + {l+1}.
/// sets[l-1] holds I_l.
struct AdmissibleSequence {
    int n = 0;
    std::vector<SubsetMask> sets;

    friend auto operator<=>(const AdmissibleSequence&, const AdmissibleSequence&) = default;
};

using AdmissibleVisitor = std::function<void(const AdmissibleSequence&)>;

/// Visits every admissible sequence once and returns the count. I_{n-1} is
/// chosen outermost and the sequence is built downward; each level runs
/// through its candidate subsets in increasing mask order. n = 1 yields the
/// single empty sequence.
BigInt enumerate_admissible(int n, const AdmissibleVisitor& visit);

bool is_admissible(const AdmissibleSequence& seq);

struct GammaVertex {
    int l = 0; // column, 1..n-1
    int j = 0; // row, 1..n

    friend auto operator<=>(const GammaVertex&, const GammaVertex&) = default;
};

/// The digraph on (l, j), 1 <= l <= n-1, 1 <= j <= n, with an arrow
/// (l, j) -> (l+1, j) exactly when l+1 <= n-1 and l+1 != j.
class GammaGraph {
public:
    explicit GammaGraph(int n);

    int n() const noexcept { return n_; }
    bool contains(GammaVertex v) const noexcept;
    /// Target of the unique arrow out of v, if any.
    std::optional<GammaVertex> successor(GammaVertex v) const;
    int out_degree(GammaVertex v) const;

private:
    int n_;
};

/// True iff every arrow leaving s lands in s. DomainError for vertices
/// outside g.
bool is_closed_in_gamma(std::span<const GammaVertex> s, const GammaGraph& g);

/// S_I = {(l, j) : j in I_l}
std::vector<GammaVertex> gamma_subset(const AdmissibleSequence& seq);

/// Number of closed subsets of Gamma with exactly l vertices in column l,
/// found by a left-to-right column search that tests arrows one vertex at a
/// time. Independent of enumerate_admissible.
BigInt count_closed_column_graded(int n);

/// Sorted elements of a mask.
std::vector<int> mask_elements(SubsetMask m);
/// {"n":3,"sets":[[1],[1,3]]}
nlohmann::json to_json(const AdmissibleSequence& seq);
/// "{1} {1,3}"
std::string to_text(const AdmissibleSequence& seq);

} // namespace genocchi
