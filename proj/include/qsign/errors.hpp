#pragma once

#include <stdexcept>
#include <string>

namespace qsign {

/// Argument outside an operation's mathematical domain (n = 0 for divisors, non-prime p, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A brute-force routine refused an input beyond its size guard.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A derivation invariant broke: an exact division left a remainder, or two
/// independent evaluators disagree. Never expected to fire.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InexactDivisionError : public InternalError {
public:
    using InternalError::InternalError;
};

class OracleMismatch : public InternalError {
public:
    using InternalError::InternalError;
};

/// Bad command line, bad manifest, or unwritable destination.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qsign
