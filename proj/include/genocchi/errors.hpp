#pragma once

#include <stdexcept>
#include <string>

namespace genocchi {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Polynomial division left a nonzero remainder.
class InexactDivision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed quantity contradicts an identity that must hold
/// (non-integral sum, negative exponent, failed divisibility).
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Request exceeds the configured enumeration bound.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace genocchi
