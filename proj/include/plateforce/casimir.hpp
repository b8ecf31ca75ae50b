#pragma once

#include "plateforce/constants.hpp"

namespace plateforce {

/// Interpolation between the dissipative (Drude-like) and non-dissipative
/// model families for the thermal force: 1 keeps the full ideal-mirror
/// thermal term, 0.5 the halved one.
class ThermalModel {
public:
    explicit ThermalModel(double reduction_factor = 1.0);

    double reduction_factor() const noexcept { return eta_; }

private:
    double eta_;
};

enum class FieldKind { Scalar, Electromagnetic };

/// Below this gap the thermal d^-3 expression is outside its range of validity.
inline constexpr double kThermalValidityGap = 5e-6;

inline bool thermal_formula_trusted(double separation) noexcept { return separation >= kThermalValidityGap; }

// All forces are returned as positive magnitudes of an attractive force.

/// Ideal mirrors at T = 0: (pi^2 hbar c / 240) S / d^4.
double casimir_zero_t(double area, double separation, const PhysicalConstants& k = kCodata2018);

/// Black-body contribution between perfect mirrors: (zeta(3) k_B T / 4 pi) S / d^3.
double thermal_casimir(double area, double separation, double temperature,
                       const PhysicalConstants& k = kCodata2018);

/// casimir_zero_t + eta * thermal_casimir. Callers should check
/// thermal_formula_trusted(separation); short gaps are allowed.
double total_casimir(double area, double separation, double temperature, const ThermalModel& model,
                     const PhysicalConstants& k = kCodata2018);

/// Relative finite-plate correction dF/F for a plate of area S and perimeter C.
/// Scalar field: 0.12 C d / S. Electromagnetic: the scalar value scaled by 1/0.36.
double border_correction(double area, double perimeter, double separation, FieldKind kind);

inline constexpr double kScalarBorderCoefficient = 0.12;
inline constexpr double kScalarEffectiveAreaPrefactor = 0.36;

}  // namespace plateforce
