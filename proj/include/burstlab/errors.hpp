#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burstlab {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad parameters: unknown format token, inverted window, invalid generator spec.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Broken or missing input data (unreadable file, malformed header).
class DataError : public Error {
public:
    using Error::Error;
};

// A train has too few spikes for the requested statistic.
class InsufficientSpikesError : public Error {
public:
    InsufficientSpikesError(const std::string& tag, std::size_t n_spikes,
                            std::size_t required = 3)
        : Error("train '" + tag + "' has " + std::to_string(n_spikes) +
                " spikes; at least " + std::to_string(required) + " are required"),
          tag_(tag) {}

    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

// A value violated a documented invariant (non-positive interval, lv out of range).
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

// Requested sample size exceeds the sampling pool.
class InfeasibleSampleError : public Error {
public:
    using Error::Error;
};

}  // namespace burstlab
