#ifndef ADJMIN_ERRORS_HPP
#define ADJMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adjmin {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& tag, const std::string& what)
        : std::runtime_error(tag + ": " + what), tag_(tag) {}

    // Short machine-readable tag, e.g. "NOT_SPECIAL".
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

// Malformed input document (configuration, table, binomial, ranking).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("PARSE_ERROR", what) {}
};

// An enumeration or completion exceeded its configured cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error("CAP_EXCEEDED", what) {}
};

// A hypothesis required by the operation does not hold.
class HypothesisError : public Error {
public:
    using Error::Error;
};

class NotSpecial : public HypothesisError {
public:
    explicit NotSpecial(const std::string& what) : HypothesisError("NOT_SPECIAL", what) {}
};

class NotConnected : public HypothesisError {
public:
    explicit NotConnected(const std::string& what) : HypothesisError("NOT_CONNECTED", what) {}
};

class NotAdmissible : public HypothesisError {
public:
    explicit NotAdmissible(const std::string& what) : HypothesisError("NOT_ADMISSIBLE", what) {}
};

class SupportViolation : public HypothesisError {
public:
    explicit SupportViolation(const std::string& what) : HypothesisError("SUPPORT_VIOLATION", what) {}
};

class MismatchedConfiguration : public HypothesisError {
public:
    explicit MismatchedConfiguration(const std::string& what)
        : HypothesisError("MISMATCHED_CONFIGURATION", what) {}
};

// An internal consistency check failed.  Always a bug signal, never swallowed.
class VerificationFailure : public Error {
public:
    explicit VerificationFailure(const std::string& what)
        : Error("VERIFICATION_FAILED", what) {}
};

} // namespace adjmin

#endif
