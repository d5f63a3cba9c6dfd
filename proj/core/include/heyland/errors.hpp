#pragma once

#include <stdexcept>
#include <string>

namespace heyland {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problems with a test-data document. `key()` names the offending entry.
class InputError : public Error {
public:
    InputError(std::string key, const std::string& message)
        : Error(message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class MissingKey : public InputError {
public:
    explicit MissingKey(const std::string& key)
        : InputError(key, "missing required key '" + key + "'") {}
};

class MalformedValue : public InputError {
public:
    MalformedValue(const std::string& key, const std::string& detail)
        : InputError(key, "malformed value for '" + key + "': " + detail) {}
};

class UnknownKey : public InputError {
public:
    explicit UnknownKey(const std::string& key)
        : InputError(key, "unknown key '" + key + "'") {}
};

class InvariantViolation : public InputError {
public:
    InvariantViolation(const std::string& key, const std::string& description)
        : InputError(key, "invariant violated at '" + key + "': " + description) {}
};

/// The two test points do not determine a finite circle.
class DegenerateConstruction : public Error {
public:
    using Error::Error;
};

/// Geometric primitive called outside its domain (coincident points, zero direction).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class ParallelLines : public Error {
public:
    ParallelLines() : Error("lines are parallel") {}
};

class VerticalLine : public Error {
public:
    VerticalLine() : Error("line is vertical; no unique vertical intercept") {}
};

class InvalidSlip : public Error {
public:
    InvalidSlip() : Error("slip must be non-zero") {}
};

class OffLocus : public Error {
public:
    explicit OffLocus(double relative_gap)
        : Error("point is not on the current locus (relative radial gap "
                + std::to_string(relative_gap) + ")") {}
};

class ZeroAirgap : public Error {
public:
    ZeroAirgap() : Error("air-gap intercept vanishes; slip undefined") {}
};

class InfeasibleOutput : public Error {
public:
    InfeasibleOutput(double requested_w, double max_output_w)
        : Error("requested output " + std::to_string(requested_w)
                + " W exceeds the maximum " + std::to_string(max_output_w) + " W"),
          max_output_w_(max_output_w) {}

    double max_output_w() const noexcept { return max_output_w_; }

private:
    double max_output_w_;
};

class NoIntersection : public Error {
public:
    using Error::Error;
};

class UndefinedRegime : public Error {
public:
    UndefinedRegime() : Error("regime is undefined at zero slip") {}
};

class NonPhysicalFit : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition on arguments was not met.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace heyland
