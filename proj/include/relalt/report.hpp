#pragma once

#include <string>
#include <vector>

#include "relalt/hamilton_jacobi.hpp"
#include "relalt/sepvar.hpp"

namespace relalt {

/// JSON record for one frame-scaling verification:
/// {mode_index, lambda_s, gamma, lambda_m, abs_err, rel_err, pass}.
/// Numbers are serialized with shortest round-trip formatting.
std::string to_json_record(const FrameScalingRecord& rec);

/// CSV row in the same column order; `frame_scaling_csv_header()` gives the
/// matching header line.
std::string to_csv_row(const FrameScalingRecord& rec);
std::string frame_scaling_csv_header();

/// JSON / CSV for the Hamilton-Jacobi mass-invariance record.
std::string to_json_record(const HJMassRecord& rec);
std::string to_csv_row(const HJMassRecord& rec);
std::string hj_mass_csv_header();

/// Loads a dense symmetric matrix from CSV (one row per line, comma
/// separated). Returns row-major storage and the dimension via `n`.
/// Throws InvalidInput for ragged rows, non-square shape, or parse errors.
std::vector<double> load_dense_csv(const std::string& path, int& n);

}  // namespace relalt
