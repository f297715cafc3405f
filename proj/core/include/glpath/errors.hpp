#pragma once

#include <stdexcept>
#include <string>

namespace glpath {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural or contract violation: malformed input, failed precondition,
/// broken group axiom, certificate that does not verify. Maps to exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// An enumeration or work budget was exhausted before the computation could
/// decide the answer. Deliberately distinct from "no solution exists".
/// Maps to exit code 2.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/// The request is outside the supported parameter range (interface too wide,
/// catalog coverage gap). Maps to exit code 1.
class ScaleError : public Error {
public:
    explicit ScaleError(const std::string& what) : Error(what) {}
};

} // namespace glpath
