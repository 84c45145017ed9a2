#pragma once

#include <stdexcept>
#include <string>

namespace tml {

// Base class for every failure raised by the library.  Callers that want a
// single catch site can use tml::Error; the subclasses distinguish "your
// input is outside the documented domain" from "this machine cannot afford
// the computation you asked for".
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a mathematical domain restriction (zero frequency where a
// nonzero one is required, p out of range, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A documented precondition of the operation does not hold (grid too coarse,
// sequence not sorted, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// The request exceeds a hard resource budget.  `requirement` carries a
// human-readable estimate of what would have been needed.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::string requirement)
        : Error(what + " (needed: " + requirement + ")"), requirement_(std::move(requirement)) {}
    const std::string& requirement() const { return requirement_; }

private:
    std::string requirement_;
};

// A validated object could not be constructed from the given data
// (frequency collision, non-sparse sequence, ...).
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& what) : Error(what) {}
};

}  // namespace tml
