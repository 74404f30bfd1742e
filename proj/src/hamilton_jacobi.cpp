#include "relalt/hamilton_jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "relalt/alterations.hpp"
#include "relalt/errors.hpp"
#include "relalt/numeric.hpp"

namespace relalt {

namespace {

void validate_params(double amplitude, double integration_constant, double mass) {
    if (amplitude == 0.0 || !std::isfinite(amplitude))
        throw InvalidInput("amplitude A must be nonzero and finite", "invalid-parameter");
    if (!(integration_constant > 0.0) || !std::isfinite(integration_constant))
        throw InvalidInput("integration constant C must be positive", "invalid-parameter");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw InvalidInput("mass must be positive", "invalid-parameter");
}

}  // namespace

HJFamily::HJFamily(double amplitude, double integration_constant, double mass,
                   Frame frame) {
    validate_params(amplitude, integration_constant, mass);
    amplitude_ = amplitude;
    c_ = integration_constant;
    mass_ = mass;
    lambda1_ = 4.0 * amplitude / mass;
    frame_ = frame;
}

HJFamily HJFamily::with_explicit_lambda1(double amplitude, double integration_constant,
                                         double mass, double lambda1, Frame frame) {
    validate_params(amplitude, integration_constant, mass);
    if (lambda1 == 0.0 || !std::isfinite(lambda1))
        throw InvalidInput("lambda1 must be nonzero and finite", "invalid-parameter");
    HJFamily fam;
    fam.amplitude_ = amplitude;
    fam.c_ = integration_constant;
    fam.mass_ = mass;
    fam.lambda1_ = lambda1;
    fam.frame_ = frame;
    return fam;
}

double HJFamily::temporal(double t) const {
    return 1.0 / (0.5 * lambda1_ * t + c_);
}

double HJFamily::action(double r, double t) const { return spatial(r) * temporal(t); }

double HJFamily::d_dr(double r, double t) const {
    return 2.0 * amplitude_ * r * temporal(t);
}

double HJFamily::d_dt(double r, double t) const {
    const double ft = temporal(t);
    return spatial(r) * (-0.5 * lambda1_) * ft * ft;
}

HJFamily HJFamily::to_m_frame(const AlterationFactor& f) const {
    // Substituting t^s = gamma t^m into f(t^s) = 1/((lambda1/2) t^s + C)
    // gives 1/((gamma lambda1 / 2) t^m + C): same C, the rate scales by
    // gamma. The mass scales by 1/gamma so that lambda1 = 4A/mass keeps
    // holding in the new frame.
    return with_explicit_lambda1(amplitude_, c_, mass_ / f.gamma(),
                                 f.gamma() * lambda1_, Frame::m);
}

HJFamily hj_closed_family(double amplitude, double integration_constant, double mass) {
    return HJFamily(amplitude, integration_constant, mass);
}

double hj_residual(const HJFamily& fam, std::span<const double> r_samples,
                   std::span<const double> t_samples) {
    if (r_samples.empty() || t_samples.empty()) return 0.0;

    const double pole = fam.pole_time();
    const auto [tmin_it, tmax_it] = std::minmax_element(t_samples.begin(), t_samples.end());
    if (*tmin_it <= pole && pole <= *tmax_it)
        throw PoleCrossingError("time samples cross the pole at t = " +
                                format_double(pole));

    double worst = 0.0;
    for (double t : t_samples) {
        for (double r : r_samples) {
            const double dr = fam.d_dr(r, t);
            const double lhs = dr * dr;
            const double rhs = 2.0 * fam.mass() * fam.d_dt(r, t);
            const double defect = std::fabs(lhs + rhs);
            const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
            worst = std::max(worst, defect / std::max(1.0, scale));
        }
    }
    return worst;
}

HJMassRecord hj_mass_invariance(double mass_s, const AlterationFactor& f, double tol) {
    if (!(mass_s > 0.0) || !std::isfinite(mass_s))
        throw InvalidInput("mass must be positive", "invalid-mass");

    const HJFamily fam_s(1.0, 1.0, mass_s);
    const HJFamily fam_m = fam_s.to_m_frame(f);

    HJMassRecord rec;
    rec.gamma = f.gamma();
    rec.mass_s = mass_s;
    rec.mass_m = fam_m.mass();
    rec.lambda1_s = fam_s.lambda1();
    rec.lambda1_m = fam_m.lambda1();
    // Equality of the two separated forms: M^s lambda1^m / gamma on the
    // s side must equal M^m lambda1^m on the m side.
    rec.lhs = mass_s * rec.lambda1_m / rec.gamma;
    rec.rhs = rec.mass_m * rec.lambda1_m;
    rec.abs_err = std::fabs(rec.lhs - rec.rhs);
    rec.rel_err = rec.lhs == 0.0 ? (rec.abs_err == 0.0 ? 0.0 : 1.0)
                                 : rec.abs_err / std::fabs(rec.lhs);
    rec.pass = rec.rel_err <= tol;
    return rec;
}

double hj_mass_alteration(double mass_s, const AlterationFactor& f) {
    if (!(mass_s > 0.0) || !std::isfinite(mass_s))
        throw InvalidInput("mass must be positive", "invalid-mass");
    const HJMassRecord rec = hj_mass_invariance(mass_s, f);
    if (!rec.pass)
        throw Error("invariance-violation",
                    "separated-form invariance failed: " + format_double(rec.lhs) +
                        " vs " + format_double(rec.rhs));
    return alter_mass(mass_s, f);
}

}  // namespace relalt
