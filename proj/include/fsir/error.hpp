#pragma once

#include <stdexcept>
#include <string>

namespace fsir {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Raised by solve_spd when the ridge ladder is exhausted.
class SingularMatrix : public Error {
public:
    SingularMatrix(const std::string& what, double last_ridge)
        : Error(what), last_ridge_(last_ridge) {}
    double last_ridge() const noexcept { return last_ridge_; }

private:
    double last_ridge_;
};

/// All-zero (or otherwise unusable) client data.
class DegenerateData : public Error {
public:
    using Error::Error;
};

/// Screening produced an empty active set.
class ScreeningDegenerate : public Error {
public:
    using Error::Error;
};

/// Uploads that cannot be merged (dimension mismatch and similar).
class ProtocolError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// A run-level failure: every client excluded, too many failed replications.
class RunError : public Error {
public:
    using Error::Error;
};

}  // namespace fsir
