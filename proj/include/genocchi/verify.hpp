#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace genocchi {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    std::string range;
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

struct CheckReport {
    int n_max = 0;
    std::uint64_t seed = 0;
    std::vector<Check> checks; // sorted by name

    std::size_t failures() const;
    const Check* find(const std::string& name) const;
};

inline constexpr std::uint64_t kDefaultSeed = 20100115;

/// Runs every route to h_n, h_n(q) and the generating-function identities
/// for n <= n_max (1..8) and collects pass/fail per check. Failures are
/// recorded, never thrown; DomainError only for n_max outside 1..8.
CheckReport crosscheck(int n_max, std::uint64_t seed = kDefaultSeed);

nlohmann::json to_json(const CheckReport& r);
std::string to_table(const CheckReport& r);

} // namespace genocchi
