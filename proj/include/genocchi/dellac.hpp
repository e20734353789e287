#pragma once

#include "genocchi/int_poly.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace genocchi {

/// A Dellac configuration on the n x 2n board: column l (one-based) marks
/// rows columns[l-1].first < columns[l-1].second, every row 1..2n is marked
/// exactly once, and every mark (l, j) has l <= j <= n + l.
struct DellacConfig {
    int n = 0;
    std::vector<std::pair<int, int>> columns;

    friend auto operator<=>(const DellacConfig&, const DellacConfig&) = default;
};

using DellacVisitor = std::function<void(const DellacConfig&)>;

/// Visits every configuration of DC_n once, in lexicographic order of the
/// flattened row pairs, and returns |DC_n|. ResourceLimit past the cap.
BigInt enumerate_dellac(int n, const DellacVisitor& visit);

/// All of DC_n; meant for small n.
std::vector<DellacConfig> collect_dellac(int n);

/// Number of marked pairs (l1, j1), (l2, j2) with l1 < l2 and j1 > j2.
int dellac_length(const DellacConfig& d);

/// True when d satisfies the row, column and band conditions.
bool is_valid_dellac(const DellacConfig& d);

/// sum over DC_n of q^{length}.
IntPoly h_poly_dellac(int n);

/// n lines "l: j_low j_high"
std::string to_text(const DellacConfig& d);
/// {"n":3,"columns":[[1,2],[3,4],[5,6]]}
nlohmann::json to_json(const DellacConfig& d);

} // namespace genocchi
