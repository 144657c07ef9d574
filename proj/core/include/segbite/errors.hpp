#pragma once

#include <stdexcept>
#include <string>

namespace segbite {

/// Input could not be decoded at all (bad JSON/XML/PNG syntax).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input decoded but violates a documented invariant (dangling ids,
/// unknown categories, inconsistent matrix shapes, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller passed an argument outside an operation's stated domain.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Serialized data does not fit the container format (label overflow,
/// wrong PNG bit depth, dimension mismatch).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem level failure, kept distinct so the CLI can map it to its
/// own exit code.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The metric has no value on this input (fewer than two pixels).
class UndefinedMetricError : public std::domain_error {
public:
    explicit UndefinedMetricError(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace segbite
