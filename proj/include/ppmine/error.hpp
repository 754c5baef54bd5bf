#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppmine {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (tokens that are not integers, unterminated sequences).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid tokens that violate the item-sequence model,
/// e.g. an itemset with more than one item.
class FormatError : public Error {
public:
    using Error::Error;
};

class EmptyDatabaseError : public Error {
public:
    EmptyDatabaseError() : Error("sequence database is empty") {}
};

/// Invalid mining or search parameters (minsup < 1, ell < 1, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An item name that is not present in the item dictionary.
class UnknownItemError : public Error {
public:
    explicit UnknownItemError(const std::string& name)
        : Error("unknown item '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class RegexSyntaxError : public Error {
public:
    RegexSyntaxError(const std::string& what, std::size_t position)
        : Error("regex syntax error at " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ppmine
