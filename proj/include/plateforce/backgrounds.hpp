#pragma once

#include "plateforce/casimir.hpp"
#include "plateforce/constants.hpp"
#include "plateforce/gravity.hpp"

namespace plateforce {

/// Uniform stray potential between the plates.
class ElectrostaticConfig {
public:
    ElectrostaticConfig(double stray_voltage, double area, double gap);

    double stray_voltage() const noexcept { return voltage_; }
    double area() const noexcept { return area_; }
    double gap() const noexcept { return gap_; }

private:
    double voltage_;  // V
    double area_;     // m^2
    double gap_;      // m
};

/// Every force channel at one working distance, all magnitudes in N.
struct ForceBudget {
    double gap = 0.0;
    double casimir = 0.0;  ///< zero-temperature term
    double thermal = 0.0;  ///< full thermal term (before the model reduction)
    double total_casimir = 0.0;
    double reduction_factor = 1.0;
    double newton = 0.0;
    double yukawa_hypothesis = 0.0;  ///< at the reference alpha, lambda
    double electrostatic = 0.0;
    double resolution = 0.0;

    double electrostatic_to_casimir = 0.0;
    double casimir_to_resolution = 0.0;
    double thermal_to_resolution = 0.0;
    double yukawa_to_resolution = 0.0;
    double newton_to_resolution = 0.0;

    bool thermal_valid = true;  ///< false below kThermalValidityGap
    /// Patch potentials are not modelled; they become less demanding at larger gaps.
    bool patch_potentials_unmodelled = true;
    /// Gravity treats the plates as laterally infinite.
    bool gravity_laterally_infinite = true;
};

/// Parallel-plate capacitor attraction epsilon0 S V^2 / (2 d^2).
double electrostatic_force(const ElectrostaticConfig& cfg, const PhysicalConstants& k = kCodata2018);

/// Fractional voltage-cancellation precision dV/V that brings the residual
/// electrostatic force down to `residual_target`. Returns 1 when the
/// uncompensated background is already at or below the target.
double voltage_control_requirement(const ElectrostaticConfig& cfg, double residual_target,
                                   const PhysicalConstants& k = kCodata2018);

/// Throws InvalidArgument when the plate pair and electrostatic config
/// disagree on area or gap.
ForceBudget build_budget(const PlatePairConfig& pp, const ThermalModel& model, const ElectrostaticConfig& es,
                         const YukawaParams& y_ref, double resolution, StackMode yukawa_mode = StackMode::MetalOnly,
                         const PhysicalConstants& k = kCodata2018);

}  // namespace plateforce
