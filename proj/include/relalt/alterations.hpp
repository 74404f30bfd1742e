#pragma once

#include "relalt/metric.hpp"

namespace relalt {

enum class QuantityKind { frequency_hz, energy_j, mass_kg, separation_constant_per_s };

const char* to_string(QuantityKind k);

/// A physical value tagged with its kind and the frame it was measured in.
/// The frame tag keeps the direction of each scaling rule machine-checked;
/// the raw-number overloads below implicitly mean "s in, m out".
struct MeasuredQuantity {
    double value;
    QuantityKind kind;
    Frame frame;

    MeasuredQuantity(double value, QuantityKind kind, Frame frame);
};

/// dE^m = gamma * dE^s.
double alter_energy_gap(double dE_s, const AlterationFactor& f);

/// nu^m = gamma * nu^s. Throws InvalidInput("negative-frequency") for nu_s < 0.
double alter_frequency(double nu_s, const AlterationFactor& f);

/// M^m = M^s / gamma. Throws InvalidInput("negative-mass") for m_s < 0.
double alter_mass(double m_s, const AlterationFactor& f);

/// lambda^m = gamma * lambda^s. Applies to any separation constant,
/// decay rates included, so the sign is preserved.
double alter_separation_constant(double lam_s, const AlterationFactor& f);

/// 1 - gamma, the fractional shift a redshift experiment reports.
double fractional_shift(const AlterationFactor& f);

/// Tagged dispatch over the four rules. Requires q.frame == Frame::s and
/// returns the altered value tagged Frame::m.
MeasuredQuantity alter(const MeasuredQuantity& q, const AlterationFactor& f);

}  // namespace relalt
