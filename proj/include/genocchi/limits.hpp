#pragma once

#include <string_view>

namespace genocchi {

enum class Model {
    Seidel,
    Dellac,
    Admissible,
    ClosedSubsets,
    MotzkinEnumeration,
    PathSum,
    Dumont,
    TrianglePairs,
    HanZeng,
};

std::string_view model_name(Model m);

/// Largest n accepted for the model. The built-in cap can be lowered (never
/// raised) through the GENOCCHI_MAX_N environment variable.
int max_n(Model m);

/// Throws ResourceLimit when n exceeds max_n(m).
void require_within_limit(Model m, long n);

} // namespace genocchi
