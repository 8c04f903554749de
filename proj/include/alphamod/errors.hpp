#pragma once

#include <stdexcept>
#include <string>

namespace alphamod {

// All library failures derive from Error so callers can map them to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent input parameters.
class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& what) : Error("parameter error: " + what) {}
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

// A finite truncation (lattice bound, grid window) is too small for the request.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& what) : Error("truncation error: " + what) {}
};

// Spatial layout does not fit (period too short for a translation pitch, etc.).
class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& what) : Error("geometry error: " + what) {}
};

// Covering constants fail to cover the frequency window.
class CoveringError : public Error {
public:
    explicit CoveringError(const std::string& what) : Error("covering failure: " + what) {}
};

}  // namespace alphamod
