#pragma once

#include <cstdint>
#include <string>

#include "relalt/constants.hpp"

namespace relalt {

/// Verification tolerances, all strictly positive. The first three mirror
/// the config-file keys; fd_agreement bounds the finite-difference
/// re-extraction inside the frame-scaling check.
struct Tolerances {
    double eigen_residual = 1e-10;  // ||D h - lambda h|| <= tol |lambda|
    double frame_scaling = 1e-12;   // |lambda_m - gamma lambda_s| <= tol |lambda_s|
    double hj_residual = 1e-9;      // Hamilton-Jacobi defect bound
    double fd_agreement = 1e-6;     // finite-difference vs analytic lambda_m

    void validate() const;
};

enum class OutputFormat { json, csv };

/// Run-wide settings for the CLI: constants source, output format,
/// tolerance overrides, and the seed for randomized sweeps.
struct RunConfig {
    Constants constants;
    Tolerances tolerances;
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 0;

    /// Loads the JSON config file
    ///   { "constants": {"G":..,"c":..,"h_planck":..},
    ///     "tolerances": {"eigen_residual":..,"frame_scaling":..,"hj_residual":..} }
    /// Both sections are optional; missing keys keep their defaults.
    static RunConfig from_json_file(const std::string& path);
    static RunConfig from_json_text(const std::string& text);
};

}  // namespace relalt
