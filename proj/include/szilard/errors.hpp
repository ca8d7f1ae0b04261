#ifndef SZILARD_ERRORS_HPP
#define SZILARD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace szilard {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument values (non-positive widths, bad ranges, ...).
/// These correspond to caller mistakes, not modeling failures.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Modeling precondition failures: the requested state does not fit the
/// grid or an operation degenerated numerically.
class ModelError : public Error {
public:
    using Error::Error;
};

class NonPositiveSigma : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class NonPositiveLength : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class NonPositiveH : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class NonPositiveInput : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class NonPositiveTemperature : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class InvalidSmoothing : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class InvalidVolumes : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class InvalidSigmas : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class InvalidGrid : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class NotNormalized : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class GridTooSmall : public ModelError {
public:
    using ModelError::ModelError;
};

class VanishingOverlap : public ModelError {
public:
    using ModelError::ModelError;
};

class GenerationFailed : public ModelError {
public:
    using ModelError::ModelError;
};

/// Closed-form and grid-based measurement accounts disagree beyond tolerance.
class MismatchBeyondTolerance : public Error {
public:
    using Error::Error;
};

} // namespace szilard

#endif
