#pragma once

// Continued fractions over Z[q], expanded as truncated power series in s.
//
//   J:        numerator / (1 - gamma(0) s - lambda(1) s^2 / (1 - gamma(1) s - lambda(2) s^2 / ...))
//   S:        c(0) / (1 - c(1) s / (1 - c(2) s / ...))
//   S-affine: head + linear s / (1 - gamma(1) s - lambda(1) s^2 / (1 - gamma(2) s - lambda(2) s^2 / ...))

#include "genocchi/int_poly.hpp"
#include "genocchi/motzkin.hpp"
#include "genocchi/power_series.hpp"

#include <functional>
#include <string>
#include <variant>

namespace genocchi {

using CoeffFn = std::function<IntPoly(int)>;

struct JFraction {
    IntPoly numerator = IntPoly(1);
    CoeffFn gamma;  // k >= 0
    CoeffFn lambda; // k >= 1
};

struct SFraction {
    CoeffFn c; // k >= 0; c(0) is the overall factor
};

struct SAffineFraction {
    IntPoly head;
    IntPoly linear;
    CoeffFn gamma;  // k >= 1
    CoeffFn lambda; // k >= 1
};

using CFSpec = std::variant<JFraction, SFraction, SAffineFraction>;

/// Depth at which truncating the fraction no longer changes coefficients
/// through s^order: ceil(order/2)+1 levels for J-type, order+1 for S-type.
std::size_t sufficient_depth(const CFSpec& spec, std::size_t order);

/// Bottom-up expansion through s^order at the sufficient depth.
PowerSeries expand(const CFSpec& spec, std::size_t order);
/// Same, truncating the fraction after `depth` levels.
PowerSeries expand_at_depth(const CFSpec& spec, std::size_t order, std::size_t depth);

/// S-fraction to the equal J-fraction:
///   gamma(0) = c1, gamma(k) = c(2k) + c(2k+1), lambda(k) = c(2k-1) c(2k).
JFraction contract_S_to_J(const SFraction& s);

/// S-fraction to the equal affine form:
///   head = c0, linear = c0 c1, gamma(k) = c(2k-1) + c(2k), lambda(k) = c(2k) c(2k+1).
SAffineFraction contract_S_to_J_affine(const SFraction& s);

/// The Motzkin weights whose path sums are the coefficients of a J-fraction
/// with numerator 1: gamma as given, alpha(k) = lambda(k+1), beta = 1.
WeightSystem<IntPoly> path_weights(const JFraction& j);

/// Named fractions.
JFraction f1_fraction();
SFraction f2_fraction();
SFraction hn_fraction();
SFraction viennot_fraction();

/// Looks up "f1", "f2", "hn" or "viennot"; DomainError otherwise.
CFSpec named_fraction(const std::string& name);

enum class TildeRoute { F1, F2 };

/// sum_n tilde_h_n(q) s^n through s^order from the chosen fraction.
PowerSeries tilde_h_series(std::size_t order, TildeRoute via);

/// Builds a fraction from JSON. Accepted shapes:
///   {"preset":"f1"}
///   {"kind":"S","c":[c0,c1,...]}
///   {"kind":"J","numerator":1,"gamma":[g0,g1,...],"lambda":[l1,l2,...]}
/// Coefficients are integers, decimal strings, or polynomial coefficient
/// arrays; indices past the lists are zero.
CFSpec fraction_from_json(const nlohmann::json& j);

} // namespace genocchi
