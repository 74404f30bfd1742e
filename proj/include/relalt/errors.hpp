#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace relalt {

/// Base class for all domain errors. `name()` is the stable machine-readable
/// identifier (kebab-case) that the CLI prints on stderr, e.g. "superluminal".
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Precondition violations on plain inputs: negative mass, bad grid,
/// missing potential, malformed matrix, out-of-range factor, and so on.
/// The `name` defaults to "invalid-input" but callers pass the specific
/// identifier where one is contracted (e.g. "negative-frequency").
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what, std::string name = "invalid-input")
        : Error(std::move(name), what) {}
};

/// Radius at or inside the Schwarzschild radius 2GM/c^2.
class HorizonError : public Error {
public:
    explicit HorizonError(const std::string& what) : Error("horizon-violation", what) {}
};

/// |v| >= c.
class SuperluminalError : public Error {
public:
    explicit SuperluminalError(const std::string& what) : Error("superluminal", what) {}
};

/// A solution tagged with the wrong measurement frame was supplied.
class FrameMismatchError : public Error {
public:
    explicit FrameMismatchError(const std::string& what) : Error("frame-mismatch", what) {}
};

/// Time samples straddle the pole of a separated temporal factor.
class PoleCrossingError : public Error {
public:
    explicit PoleCrossingError(const std::string& what) : Error("pole-crossing", what) {}
};

/// Eigen solve failed to meet the residual contract; carries the iteration
/// diagnostics for the failing mode.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, int mode_index, int iterations,
                     double residual, double tolerance)
        : Error("convergence-failure", what),
          mode_index(mode_index),
          iterations(iterations),
          residual(residual),
          tolerance(tolerance) {}

    int mode_index;
    int iterations;
    double residual;
    double tolerance;
};

}  // namespace relalt
