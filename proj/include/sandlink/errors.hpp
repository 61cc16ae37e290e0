// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include <stdexcept>
#include <string>

namespace sandlink {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario file is not syntactically valid (CLI exit code 2).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Scenario file parses but violates the schema (CLI exit code 3).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numeric or domain error raised while evaluating a model (CLI exit code 4).
class ComputeError : public Error {
public:
    using Error::Error;
};

// permittivity
class EmptySampleSet final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class FractionSumMismatch final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class NegativeFraction final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class HumidityOutOfRange final : public ComputeError {
public:
    using ComputeError::ComputeError;
};

// dusty channel / path loss
class NonPositiveInput final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class ZeroGamma final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class EmptyProfile final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class NegativeAttenuation final : public ComputeError {
public:
    using ComputeError::ComputeError;
};

// depolarization
class NonPositiveDistance final : public ComputeError {
public:
    using ComputeError::ComputeError;
};

// link budget
class ProfileLengthMismatch final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class LinkDownInClearAir final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class NonPositiveBracket final : public ComputeError {
public:
    using ComputeError::ComputeError;
};
class NoPositiveRange final : public ComputeError {
public:
    using ComputeError::ComputeError;
};

} // namespace sandlink
