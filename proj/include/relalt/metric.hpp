#pragma once

#include <string>

#include "relalt/constants.hpp"

namespace relalt {

/// Measurement frames. `s` marks measurements taken where gravity (or
/// relative motion) affects the apparatus; `m` marks measurements taken
/// where those effects vanish. Alteration rules map s-values to m-values.
enum class Frame { s, m };

/// What produced an alteration factor.
enum class FactorKind { gravitational, kinematic, composed };

const char* to_string(Frame f);
const char* to_string(FactorKind k);

/// Spherically symmetric source evaluated at radial coordinate `radius`.
/// The horizon condition radius > 2GM/c^2 depends on the constants in use
/// and is enforced by schwarzschild_lambda.
struct GravitationalSource {
    double mass;    // kg, >= 0
    double radius;  // m, > 0

    GravitationalSource(double mass, double radius);
};

/// Frame moving at constant relative velocity. |velocity| < c is enforced
/// by special_lambda against the constants in use.
struct KinematicFrame {
    double velocity;  // m s^-1

    explicit KinematicFrame(double velocity) : velocity(velocity) {}
};

/// The line-element factor pair (lambda, gamma = sqrt(lambda)).
/// Invariants: 0 < lambda <= 1, 0 < gamma <= 1, gamma^2 == lambda to within
/// a couple of ulps. Both values are stored so the pairing is fixed at
/// construction rather than recomputed.
class AlterationFactor {
public:
    static AlterationFactor from_lambda(double lambda, FactorKind kind);
    static AlterationFactor from_gamma(double gamma, FactorKind kind);

    /// Identity factor (lambda = gamma = 1).
    static AlterationFactor identity(FactorKind kind = FactorKind::composed);

    double lambda() const noexcept { return lambda_; }
    double gamma() const noexcept { return gamma_; }
    FactorKind kind() const noexcept { return kind_; }

private:
    AlterationFactor(double lambda, double gamma, FactorKind kind)
        : lambda_(lambda), gamma_(gamma), kind_(kind) {}

    double lambda_;
    double gamma_;
    FactorKind kind_;
};

/// lambda = 1 - 2GM/(c^2 R) for a clock at radius R outside the source.
/// Throws HorizonError when R <= 2GM/c^2 and InvalidInput for R <= 0 or M < 0.
AlterationFactor schwarzschild_lambda(const GravitationalSource& src,
                                      const Constants& k = Constants{});

/// lambda = 1 - v^2/c^2 for constant relative velocity v.
/// Throws SuperluminalError when |v| >= c.
AlterationFactor special_lambda(const KinematicFrame& frame,
                                const Constants& k = Constants{});

/// Multiplicative composition on gamma: the two effects are chained through
/// the common m-frame reference. gamma = a.gamma * b.gamma, lambda = gamma^2.
AlterationFactor compose(const AlterationFactor& a, const AlterationFactor& b);

/// dt^s = gamma dt^m.
double time_s_from_m(double dt_m, const AlterationFactor& f);

/// dt^m = dt^s / gamma.
double time_m_from_s(double dt_s, const AlterationFactor& f);

}  // namespace relalt
