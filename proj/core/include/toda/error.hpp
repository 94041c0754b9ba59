#pragma once

#include <stdexcept>
#include <string>

namespace toda {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong lengths, alphabets, shapes, rings.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Document parsing or validation failure. `path` names the offending field.
class ParseError : public Error {
public:
    ParseError(std::string path, const std::string& what)
        : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace toda
