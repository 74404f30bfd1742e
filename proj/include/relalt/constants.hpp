#pragma once

#include <string>

namespace relalt {

/// Physical constants in SI units. Defaults are CODATA 2018; tests and
/// unit-free derivations override them (G = c = h = 1 is legal).
struct Constants {
    double G = 6.67430e-11;           // gravitational constant, m^3 kg^-1 s^-2
    double c = 299792458.0;           // speed of light, m s^-1
    double h_planck = 6.62607015e-34; // Planck constant, J s

    static Constants codata2018() { return Constants{}; }

    /// Loads constants from a JSON object with keys "G", "c", "h_planck".
    /// Missing keys keep their CODATA defaults; non-positive or non-numeric
    /// values are rejected.
    static Constants from_json_file(const std::string& path);
    static Constants from_json_text(const std::string& text);

    /// Throws InvalidInput unless all three values are strictly positive
    /// and finite.
    void validate() const;
};

}  // namespace relalt
