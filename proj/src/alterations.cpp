#include "relalt/alterations.hpp"

#include <cmath>

#include "relalt/errors.hpp"

namespace relalt {

const char* to_string(QuantityKind k) {
    switch (k) {
        case QuantityKind::frequency_hz: return "frequency_Hz";
        case QuantityKind::energy_j: return "energy_J";
        case QuantityKind::mass_kg: return "mass_kg";
        case QuantityKind::separation_constant_per_s: return "separation_constant_per_s";
    }
    return "?";
}

MeasuredQuantity::MeasuredQuantity(double value, QuantityKind kind, Frame frame)
    : value(value), kind(kind), frame(frame) {
    if (!std::isfinite(value)) throw InvalidInput("quantity value must be finite");
    if (kind == QuantityKind::frequency_hz && value < 0.0)
        throw InvalidInput("frequency must be non-negative", "negative-frequency");
    if (kind == QuantityKind::mass_kg && value < 0.0)
        throw InvalidInput("mass must be non-negative", "negative-mass");
}

double alter_energy_gap(double dE_s, const AlterationFactor& f) {
    return f.gamma() * dE_s;
}

double alter_frequency(double nu_s, const AlterationFactor& f) {
    if (nu_s < 0.0 || !std::isfinite(nu_s))
        throw InvalidInput("frequency must be finite and non-negative", "negative-frequency");
    return f.gamma() * nu_s;
}

double alter_mass(double m_s, const AlterationFactor& f) {
    if (m_s < 0.0 || !std::isfinite(m_s))
        throw InvalidInput("mass must be finite and non-negative", "negative-mass");
    return m_s / f.gamma();
}

double alter_separation_constant(double lam_s, const AlterationFactor& f) {
    return f.gamma() * lam_s;
}

double fractional_shift(const AlterationFactor& f) {
    return 1.0 - f.gamma();
}

MeasuredQuantity alter(const MeasuredQuantity& q, const AlterationFactor& f) {
    if (q.frame != Frame::s)
        throw FrameMismatchError("alteration rules map s-frame values to m-frame values");
    double value = 0.0;
    switch (q.kind) {
        case QuantityKind::frequency_hz: value = alter_frequency(q.value, f); break;
        case QuantityKind::energy_j: value = alter_energy_gap(q.value, f); break;
        case QuantityKind::mass_kg: value = alter_mass(q.value, f); break;
        case QuantityKind::separation_constant_per_s:
            value = alter_separation_constant(q.value, f);
            break;
    }
    return MeasuredQuantity(value, q.kind, Frame::m);
}

}  // namespace relalt
