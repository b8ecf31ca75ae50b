#include <doctest.h>

#include <cmath>
#include <random>

#include "plateforce/casimir.hpp"
#include "plateforce/error.hpp"

using namespace plateforce;
using doctest::Approx;

// Reference values below were evaluated independently at 40 significant
// digits (mpmath) from the same pinned constants.
namespace ref {
constexpr double kCasimirCoefficient = 1.3001257724477535e-27;  // J m
constexpr double kCasimir5um = 2.496241483099687e-08;
constexpr double kCasimir10um = 1.5601509269373042e-09;
constexpr double kThermal5um = 3.803565795851495e-08;
constexpr double kThermal10um = 4.754457244814369e-09;
constexpr double kTotalEta1 = 6.299807278951182e-08;
constexpr double kTotalEtaHalf = 4.398024381025434e-08;
}  // namespace ref

TEST_CASE("zero-temperature Casimir force") {
    CHECK(casimir_zero_t(0.012, 5e-6) == Approx(ref::kCasimir5um).epsilon(1e-14));
    CHECK(casimir_zero_t(0.012, 1e-5) == Approx(ref::kCasimir10um).epsilon(1e-14));
    // the rounded figures of 25 nN and 1.5 nN
    CHECK(casimir_zero_t(0.012, 5e-6) == Approx(25e-9).epsilon(0.05));
    CHECK(casimir_zero_t(0.012, 1e-5) == Approx(1.5e-9).epsilon(0.05));
    CHECK(casimir_zero_t(0.012, 5e-6) / casimir_zero_t(0.012, 1e-5) == Approx(16.0).epsilon(1e-15));
    CHECK(kCodata2018.casimir_coefficient() == Approx(ref::kCasimirCoefficient).epsilon(1e-15));
}

TEST_CASE("Casimir force scales as S/d^4") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> log_d(std::log(1e-7), std::log(1e-3));
    std::uniform_real_distribution<double> log_s(std::log(1e-4), std::log(1.0));
    const double coefficient = kCodata2018.casimir_coefficient();
    for (int i = 0; i < 500; ++i) {
        const double d = std::exp(log_d(rng)), s = std::exp(log_s(rng));
        const double f = casimir_zero_t(s, d);
        CHECK(f > 0.0);
        CHECK(f * d * d * d * d / s == Approx(coefficient).epsilon(1e-12));
    }
}

TEST_CASE("thermal Casimir contribution") {
    CHECK(thermal_casimir(0.012, 5e-6, 300.0) == Approx(ref::kThermal5um).epsilon(1e-14));
    CHECK(thermal_casimir(0.012, 1e-5, 300.0) == Approx(ref::kThermal10um).epsilon(1e-14));
    CHECK(thermal_casimir(0.012, 5e-6, 0.0) == 0.0);
    CHECK(thermal_casimir(3.0, 1e-3, 0.0) == 0.0);

    // linear in S and T, d^-3
    const double base = thermal_casimir(0.01, 7e-6, 250.0);
    CHECK(thermal_casimir(0.03, 7e-6, 250.0) == Approx(3 * base).epsilon(1e-14));
    CHECK(thermal_casimir(0.01, 7e-6, 500.0) == Approx(2 * base).epsilon(1e-14));
    CHECK(thermal_casimir(0.01, 14e-6, 250.0) == Approx(base / 8).epsilon(1e-14));

    CHECK_THROWS_AS(thermal_casimir(0.0, 5e-6, 300.0), InvalidArgument);
    CHECK_THROWS_AS(thermal_casimir(0.012, 0.0, 300.0), InvalidArgument);
    CHECK_THROWS_AS(thermal_casimir(0.012, 5e-6, -1.0), InvalidArgument);
}

TEST_CASE("total force across the thermal model family") {
    CHECK(total_casimir(0.012, 5e-6, 300.0, ThermalModel(1.0)) == Approx(ref::kTotalEta1).epsilon(1e-14));
    CHECK(total_casimir(0.012, 5e-6, 300.0, ThermalModel(0.5)) == Approx(ref::kTotalEtaHalf).epsilon(1e-14));
    CHECK(total_casimir(0.012, 5e-6, 0.0, ThermalModel(0.73)) == casimir_zero_t(0.012, 5e-6));

    for (double t : {1.0, 4.0, 77.0, 300.0})
        for (double d : {1e-6, 5e-6, 2e-5})
            CHECK(total_casimir(0.012, d, t, ThermalModel(1.0)) > total_casimir(0.012, d, t, ThermalModel(0.5)));

    CHECK_THROWS_AS(ThermalModel(0.49), InvalidArgument);
    CHECK_THROWS_AS(ThermalModel(1.01), InvalidArgument);
}

TEST_CASE("thermal validity threshold is a soft flag") {
    CHECK(thermal_formula_trusted(5e-6));
    CHECK(thermal_formula_trusted(1e-5));
    CHECK_FALSE(thermal_formula_trusted(3e-6));
    CHECK_NOTHROW(total_casimir(0.012, 3e-6, 300.0, ThermalModel()));
}

TEST_CASE("border correction") {
    CHECK(border_correction(0.01, 0.4, 1e-6, FieldKind::Scalar) == Approx(4.8e-6).epsilon(1e-14));
    CHECK(border_correction(0.01, 0.4, 1e-6, FieldKind::Electromagnetic) == Approx(4.8e-6 / 0.36).epsilon(1e-14));
    CHECK(border_correction(0.01, 0.4, 1e-6, FieldKind::Electromagnetic) == Approx(1.3333e-5).epsilon(1e-4));
    CHECK(border_correction(0.01, 0.4, 1e-15, FieldKind::Scalar) < 1e-14);

    const double s = border_correction(0.012, 0.44, 3e-6, FieldKind::Scalar);
    CHECK(border_correction(0.012, 0.44, 6e-6, FieldKind::Scalar) == Approx(2 * s).epsilon(1e-14));
    CHECK(border_correction(0.024, 0.88, 3e-6, FieldKind::Scalar) == Approx(s).epsilon(1e-14));
    CHECK(border_correction(0.012, 0.44, 3e-6, FieldKind::Electromagnetic) / s == Approx(1 / 0.36).epsilon(1e-14));

    CHECK_THROWS_AS(border_correction(0.01, 0.0, 1e-6, FieldKind::Scalar), InvalidArgument);
}
