#pragma once

#include "genocchi/bivar_poly.hpp"

namespace genocchi {

/// C_1 = 1,
/// C_n(x,q) = (1+qx) ((1+qx) C_{n-1}(1+qx, q) - x C_{n-1}(x, q)) / (1+qx-x).
/// Every division is checked exact; an inexact step raises
/// InternalInconsistency. Results are memoized process-wide.
BivarPoly hanzeng_C(int n);

/// C_n(1, q) / (1+q)^{n-1}, checked exact.
IntPoly hanzeng_barc(int n);

} // namespace genocchi
