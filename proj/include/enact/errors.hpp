#pragma once

#include <stdexcept>
#include <string>

namespace enact {

/// Bad input data: unknown tags, out-of-range coefficients, empty
/// required sets, unresolved references.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Data that parses but cannot be reconciled with the calculus, e.g. an
/// effect exceeding the footprint of the activity it modifies.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed document: JSON syntax or schema violations. Carries a
/// human-readable location when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enact
