#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zpm {

// Base for every failure raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// Evaluation point or summation range outside what a component supports.
class RangeError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

// Requested allocation exceeds the configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree by an exact identity did not.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Data parsed fine but violates a structural invariant (counts, spot checks).
class IntegrityError : public Error {
public:
    IntegrityError(const std::string& what, std::size_t prefix = 0)
        : Error(what), prefix_(prefix) {}

    // Length of the first offending prefix, 0 when not applicable.
    std::size_t prefix() const noexcept { return prefix_; }

private:
    std::size_t prefix_;
};

}  // namespace zpm
