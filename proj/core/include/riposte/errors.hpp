#pragma once

#include <stdexcept>
#include <string>

namespace riposte {

/// Base class for computation errors. The CLI maps these to exit code 3.
class EngineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// AIV must be strictly positive; RORI divides by ARC + AIV.
class NonPositiveInfrastructureValue : public EngineError {
public:
    using EngineError::EngineError;
};

/// ROI/ROSI are undefined for a zero or negative cost basis.
class ZeroCost : public EngineError {
public:
    using EngineError::EngineError;
};

/// Triangle parameters must satisfy min <= mode <= max.
class InvalidTriangle : public EngineError {
public:
    using EngineError::EngineError;
};

/// A qualitative label not present in the active scale.
class UnknownLevel : public EngineError {
public:
    using EngineError::EngineError;
};

/// A candidate mutation that would leave a protection assignment out of range.
class InvalidMutation : public EngineError {
public:
    using EngineError::EngineError;
};

}  // namespace riposte
