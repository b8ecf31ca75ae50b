#pragma once

// Independent numerical references for the closed-form force expressions.
// Test-only: nothing in src/ includes this file.

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

// Tolerances below ~1e-14 sit under the rounding floor and force the
// adaptive scheme down to its maximum depth.
inline constexpr double kOuterTolerance = 1e-12;
inline constexpr double kInnerTolerance = 1e-13;
inline constexpr unsigned kMaxDepth = 15;

/// Adaptive Gauss-Kronrod over [a, b], mapped onto [0, 1] first: the
/// adaptive error estimate in Boost 1.74 is not scaled by the interval
/// width and never converges on micrometre-wide intervals.
template <class F>
double integrate(F&& f, double a, double b, double tolerance = kOuterTolerance) {
    using boost::math::quadrature::gauss_kronrod;
    const double width = b - a;
    auto unit = [&](double u) { return f(a + width * u); };
    return width * gauss_kronrod<double, 61>::integrate(unit, 0.0, 1.0, kMaxDepth, tolerance);
}

/// Attraction between two thin sheets of areal densities 1 kg/m^2 a distance
/// z apart, per unit area, from integrating the point force over the plane:
/// 2 pi G (1 + alpha e^(-z/lambda)).  Only the Yukawa part is returned.
inline double sheet_yukawa_pressure(double z, double alpha, double lambda, double G) {
    return 2.0 * std::numbers::pi * G * alpha * std::exp(-z / lambda);
}

/// Double integral of the sheet kernel over both slab thicknesses.
inline double plate_yukawa(double rho_a, double rho_b, double area, double tau_a, double tau_b, double gap,
                           double alpha, double lambda, double G) {
    auto inner = [&](double za) {
        return integrate([&](double zb) { return sheet_yukawa_pressure(gap + za + zb, alpha, lambda, G); }, 0.0,
                         tau_b, kInnerTolerance);
    };
    return rho_a * rho_b * area * integrate(inner, 0.0, tau_a);
}

/// Strip-by-strip Casimir integral across a plate tilted along its length.
inline double tilted_casimir(double width, double length, double gap, double angle, double casimir_coefficient) {
    return integrate(
        [&](double x) {
            const double h = gap + angle * x;
            return casimir_coefficient * width / (h * h * h * h);
        },
        0.0, length);
}

inline double relative_error(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace oracle
