#pragma once

#include <stdexcept>
#include <string>

namespace leapchain {

// Base of all leapchain errors. The three intermediate categories map to the
// CLI exit codes: validation -> 2, tolerance -> 3, ill-conditioned -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ToleranceError : public Error {
public:
    using Error::Error;
};

class IllConditionedError : public Error {
public:
    using Error::Error;
};

// --- parameter validation ---

class NotAProbability : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NegativeEntry : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// sum(p) == 0 or sum(q) == 0: the chain drifts monotonically to +-infinity.
class MonotoneDrift : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class HoldTooLarge : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- structural preconditions ---

class BarrierTooNarrow : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// gcd of the step support exceeds 1; reflecting-chain results need an
// irreducible chain.
class NotIrreducible : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoStationaryDistribution : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DivergentSum : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OracleCapExceeded : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// --- numerical tolerance failures ---

class RootResidualTooLarge : public ToleranceError {
public:
    using ToleranceError::ToleranceError;
};

// Numerical root locations contradict the inside/on/outside count law.
class LocationCountMismatch : public ToleranceError {
public:
    using ToleranceError::ToleranceError;
};

class NoConvergence : public ToleranceError {
public:
    using ToleranceError::ToleranceError;
};

// --- conditioning ---

class IllConditioned : public IllConditionedError {
public:
    using IllConditionedError::IllConditionedError;
};

class SingularSystem : public IllConditionedError {
public:
    using IllConditionedError::IllConditionedError;
};

} // namespace leapchain
