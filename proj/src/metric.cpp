#include "relalt/metric.hpp"

#include <cmath>

#include "relalt/errors.hpp"
#include "relalt/numeric.hpp"

namespace relalt {

const char* to_string(Frame f) {
    return f == Frame::s ? "s" : "m";
}

const char* to_string(FactorKind k) {
    switch (k) {
        case FactorKind::gravitational: return "gravitational";
        case FactorKind::kinematic: return "kinematic";
        case FactorKind::composed: return "composed";
    }
    return "?";
}

GravitationalSource::GravitationalSource(double mass, double radius)
    : mass(mass), radius(radius) {
    if (!(mass >= 0.0) || !std::isfinite(mass))
        throw InvalidInput("mass must be finite and non-negative");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidInput("radius must be finite and strictly positive");
}

AlterationFactor AlterationFactor::from_lambda(double lambda, FactorKind kind) {
    if (!std::isfinite(lambda) || !(lambda > 0.0) || lambda > 1.0)
        throw InvalidInput("lambda must lie in (0, 1]", "invalid-parameter");
    return AlterationFactor(lambda, std::sqrt(lambda), kind);
}

AlterationFactor AlterationFactor::from_gamma(double gamma, FactorKind kind) {
    if (!std::isfinite(gamma) || !(gamma > 0.0) || gamma > 1.0)
        throw InvalidInput("gamma must lie in (0, 1]", "invalid-parameter");
    return AlterationFactor(gamma * gamma, gamma, kind);
}

AlterationFactor AlterationFactor::identity(FactorKind kind) {
    return AlterationFactor(1.0, 1.0, kind);
}

AlterationFactor schwarzschild_lambda(const GravitationalSource& src, const Constants& k) {
    k.validate();
    if (!(src.radius > 0.0)) throw InvalidInput("radius must be strictly positive");
    if (src.mass < 0.0) throw InvalidInput("mass must be non-negative");

    const double schwarzschild_radius = 2.0 * k.G * src.mass / (k.c * k.c);
    if (src.radius <= schwarzschild_radius)
        throw HorizonError("radius " + format_double(src.radius) +
                           " m is at or inside the Schwarzschild radius " +
                           format_double(schwarzschild_radius) + " m");

    const double lambda = 1.0 - schwarzschild_radius / src.radius;
    return AlterationFactor::from_lambda(lambda, FactorKind::gravitational);
}

AlterationFactor special_lambda(const KinematicFrame& frame, const Constants& k) {
    k.validate();
    const double beta = frame.velocity / k.c;
    if (!std::isfinite(beta) || std::abs(beta) >= 1.0)
        throw SuperluminalError("|v| = " + format_double(std::abs(frame.velocity)) +
                                " m/s is not below c = " + format_double(k.c) + " m/s");

    const double lambda = 1.0 - beta * beta;
    return AlterationFactor::from_lambda(lambda, FactorKind::kinematic);
}

AlterationFactor compose(const AlterationFactor& a, const AlterationFactor& b) {
    return AlterationFactor::from_gamma(a.gamma() * b.gamma(), FactorKind::composed);
}

double time_s_from_m(double dt_m, const AlterationFactor& f) {
    return f.gamma() * dt_m;
}

double time_m_from_s(double dt_s, const AlterationFactor& f) {
    return dt_s / f.gamma();
}

}  // namespace relalt
