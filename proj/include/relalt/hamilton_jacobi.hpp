#pragma once

#include <span>

#include "relalt/metric.hpp"

namespace relalt {

/// Product-separated free-particle family for the characteristic-function
/// equation (dS/dr)^2 = -2 M dS/dt:
///
///   S(r, t) = h(r) f(t),   h(r) = A r^2,   f(t) = 1 / ((lambda1/2) t + C),
///
/// with lambda1 = 4A / mass, so that (h')^2 / h = M lambda1 = -2M f'/f^2.
/// The separation here is a product, not the conventional additive split;
/// that is the form the whole construction rests on.
class HJFamily {
public:
    /// Consistent family: lambda1 is derived as 4A / mass.
    HJFamily(double amplitude, double integration_constant, double mass,
             Frame frame = Frame::s);

    /// Diagnostic factory that accepts an explicit lambda1, possibly
    /// inconsistent with 4A / mass. Used to evaluate the defect of broken
    /// families; everything else should go through the main constructor.
    static HJFamily with_explicit_lambda1(double amplitude, double integration_constant,
                                          double mass, double lambda1,
                                          Frame frame = Frame::s);

    double amplitude() const noexcept { return amplitude_; }
    double integration_constant() const noexcept { return c_; }
    double mass() const noexcept { return mass_; }
    double lambda1() const noexcept { return lambda1_; }
    Frame frame() const noexcept { return frame_; }

    /// Pole of f(t): t = -2C / lambda1.
    double pole_time() const { return -2.0 * c_ / lambda1_; }

    double spatial(double r) const { return amplitude_ * r * r; }         // h(r)
    double temporal(double t) const;                                      // f(t)
    double action(double r, double t) const;                              // S(r, t)
    double d_dr(double r, double t) const;                                // dS/dr
    double d_dt(double r, double t) const;                                // dS/dt

    /// The same family re-expressed in m-frame time via t^s = gamma t^m:
    /// lambda1 -> gamma lambda1, mass -> mass / gamma, A and C unchanged.
    HJFamily to_m_frame(const AlterationFactor& f) const;

private:
    HJFamily() = default;

    double amplitude_ = 1.0;
    double c_ = 1.0;
    double mass_ = 1.0;
    double lambda1_ = 4.0;
    Frame frame_ = Frame::s;
};

/// Validating factory for the closed family. Throws
/// InvalidInput("invalid-parameter") for A == 0, C <= 0, or mass <= 0.
HJFamily hj_closed_family(double amplitude, double integration_constant, double mass);

/// max over (r, t) samples of |(dS/dr)^2 + 2 M dS/dt| / max(1, local scale),
/// where the local scale is the larger magnitude of the two equation terms.
/// Derivatives are analytic. Contract: <= 1e-9 for consistent families.
/// Throws PoleCrossingError when the time samples straddle (or touch) the
/// pole of f.
double hj_residual(const HJFamily& fam, std::span<const double> r_samples,
                   std::span<const double> t_samples);

/// Numbers behind the separated-form invariance check of hj_mass_alteration.
/// lhs = M^s lambda1^m / gamma and rhs = M^m lambda1^m must agree; rel_err
/// is relative to |lhs|.
struct HJMassRecord {
    double gamma = 1.0;
    double mass_s = 1.0;
    double mass_m = 1.0;
    double lambda1_s = 0.0;
    double lambda1_m = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
};

/// Carries out the invariance check on a canonical family (A = 1, C = 1)
/// with the given mass, at tolerance `tol` (relative).
HJMassRecord hj_mass_invariance(double mass_s, const AlterationFactor& f,
                                double tol = 1e-12);

/// M^m = M^s / gamma, with the separated-form invariance re-derived and
/// asserted internally (throws Error("invariance-violation") if it ever
/// failed). Agrees bitwise with alter_mass. Throws
/// InvalidInput("invalid-mass") for mass_s <= 0.
double hj_mass_alteration(double mass_s, const AlterationFactor& f);

}  // namespace relalt
