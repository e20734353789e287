#include "genocchi/limits.hpp"

#include "genocchi/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace genocchi {

namespace {

struct Cap {
    Model model;
    std::string_view name;
    int max_n;
};

constexpr Cap kCaps[] = {
    {Model::Seidel, "seidel", 2000},
    {Model::Dellac, "dellac", 9},
    {Model::Admissible, "admissible", 9},
    {Model::ClosedSubsets, "closed-subsets", 9},
    {Model::MotzkinEnumeration, "motzkin", 14},
    {Model::PathSum, "path-sum", 40},
    {Model::Dumont, "dumont", 4},
    {Model::TrianglePairs, "triangles", 6},
    {Model::HanZeng, "hanzeng", 30},
};

const Cap& cap_of(Model m) {
    for (const auto& c : kCaps) {
        if (c.model == m) {
            return c;
        }
    }
    throw DomainError("unknown model");
}

int env_cap() {
    const char* raw = std::getenv("GENOCCHI_MAX_N");
    if (raw == nullptr || *raw == '\0') {
        return -1;
    }
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 0) {
        return -1;
    }
    return static_cast<int>(std::min<long>(v, 1 << 20));
}

} // namespace

std::string_view model_name(Model m) { return cap_of(m).name; }

int max_n(Model m) {
    int cap = cap_of(m).max_n;
    if (int e = env_cap(); e >= 0) {
        cap = std::min(cap, e);
    }
    return cap;
}

void require_within_limit(Model m, long n) {
    int cap = max_n(m);
    if (n > cap) {
        throw ResourceLimit(std::string(model_name(m)) + ": n=" + std::to_string(n) +
                            " exceeds limit " + std::to_string(cap));
    }
}

} // namespace genocchi
