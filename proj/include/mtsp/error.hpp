#pragma once

#include <stdexcept>
#include <string>

namespace mtsp {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid caller-supplied parameters (bad region, zero counts, non-finite coordinates).
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input. The message names the offending JSON path.
class ParseError : public Error {
public:
    ParseError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path), detail_(what) {}

    const std::string& path() const noexcept { return path_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string path_;
    std::string detail_;
};

/// The instance cannot be solved under the requested policy (n < k).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A data structure would exceed its configured memory budget.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace mtsp
