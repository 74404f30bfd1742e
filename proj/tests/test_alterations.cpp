#include <cmath>
#include <random>

#include <doctest.h>

#include "relalt/alterations.hpp"
#include "relalt/errors.hpp"
#include "relalt/metric.hpp"
#include "relalt/numeric.hpp"

using namespace relalt;

namespace {
AlterationFactor g(double gamma) {
    return AlterationFactor::from_gamma(gamma, FactorKind::composed);
}
}  // namespace

TEST_CASE("frequency rule") {
    CHECK(alter_frequency(1e15, g(1.0)) == 1e15);
    CHECK(alter_frequency(1e15, g(0.8)) == 8e14);
    CHECK(alter_frequency(0.0, g(0.5)) == 0.0);
    CHECK_THROWS_AS(alter_frequency(-1.0, g(0.8)), InvalidInput);
    try {
        alter_frequency(-1.0, g(0.8));
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(e.name() == "negative-frequency");
    }
}

TEST_CASE("mass rule") {
    CHECK(alter_mass(1.0, g(0.8)) == 1.25);
    CHECK(alter_mass(1.0, g(1.0)) == 1.0);
    CHECK_THROWS_AS(alter_mass(-1.0, g(0.8)), InvalidInput);
    try {
        alter_mass(-2.0, g(0.8));
        FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
        CHECK(e.name() == "negative-mass");
    }
}

TEST_CASE("energy gap and separation constant rules") {
    CHECK(alter_energy_gap(2.0, g(0.8)) == 1.6);
    CHECK(alter_energy_gap(-2.0, g(0.8)) == -1.6);  // gaps may carry sign
    CHECK(alter_separation_constant(-9.8696, g(0.8)) == -9.8696 * 0.8);
    CHECK(std::fabs(alter_separation_constant(-9.8696, g(0.8)) - (-7.89568)) <=
          1e-12 * 9.8696);
}

TEST_CASE("fractional shift") {
    CHECK(fractional_shift(g(1.0)) == 0.0);
    CHECK(fractional_shift(g(0.8)) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("redshift chain: energy route equals frequency route") {
    // Dividing the energy-gap rule by the Planck constant must land on the
    // frequency rule, whichever order the operations run in.
    Constants k;
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ue(-25.0, -15.0);
    std::uniform_real_distribution<double> ug(0.01, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double dE = std::pow(10.0, ue(rng));
        const auto f = g(ug(rng));
        const double via_energy = alter_energy_gap(dE, f) / k.h_planck;
        const double via_frequency = alter_frequency(dE / k.h_planck, f);
        CHECK(ulp_distance(via_energy, via_frequency) <= 2);
    }
}

TEST_CASE("mass-energy product is frame invariant") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> um(-3.0, 3.0);
    std::uniform_real_distribution<double> ug(0.01, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double M = std::pow(10.0, um(rng));
        const double E = std::pow(10.0, um(rng));
        const auto f = g(ug(rng));
        CHECK(ulp_distance(alter_mass(M, f) * alter_energy_gap(E, f), M * E) <= 4);
    }
}

TEST_CASE("frequency rule composes") {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> ug(0.01, 1.0);
    std::uniform_real_distribution<double> un(1.0, 1e16);
    for (int i = 0; i < 500; ++i) {
        const auto f1 = g(ug(rng));
        const auto f2 = g(ug(rng));
        const double nu = un(rng);
        const double stepped = alter_frequency(alter_frequency(nu, f1), f2);
        const double fused = alter_frequency(nu, compose(f1, f2));
        CHECK(ulp_distance(stepped, fused) <= 2);
    }
}

TEST_CASE("tagged dispatch enforces the frame direction") {
    const auto f = g(0.8);
    const MeasuredQuantity nu_s(1e15, QuantityKind::frequency_hz, Frame::s);
    const MeasuredQuantity out = alter(nu_s, f);
    CHECK(out.value == 8e14);
    CHECK(out.frame == Frame::m);
    CHECK(out.kind == QuantityKind::frequency_hz);

    const MeasuredQuantity nu_m(1e15, QuantityKind::frequency_hz, Frame::m);
    CHECK_THROWS_AS(alter(nu_m, f), FrameMismatchError);

    const MeasuredQuantity m_s(2.0, QuantityKind::mass_kg, Frame::s);
    CHECK(alter(m_s, f).value == alter_mass(2.0, f));
    const MeasuredQuantity e_s(3.0, QuantityKind::energy_j, Frame::s);
    CHECK(alter(e_s, f).value == alter_energy_gap(3.0, f));
    const MeasuredQuantity r_s(-2.0, QuantityKind::separation_constant_per_s, Frame::s);
    CHECK(alter(r_s, f).value == alter_separation_constant(-2.0, f));
}

TEST_CASE("measured quantity validation") {
    CHECK_THROWS_AS(MeasuredQuantity(-1.0, QuantityKind::frequency_hz, Frame::s),
                    InvalidInput);
    CHECK_THROWS_AS(MeasuredQuantity(-1.0, QuantityKind::mass_kg, Frame::s),
                    InvalidInput);
    CHECK_NOTHROW(MeasuredQuantity(-1.0, QuantityKind::energy_j, Frame::s));
    CHECK_NOTHROW(MeasuredQuantity(-1.0, QuantityKind::separation_constant_per_s,
                                   Frame::s));
    CHECK_THROWS_AS(
        MeasuredQuantity(std::nan(""), QuantityKind::energy_j, Frame::s),
        InvalidInput);
}
