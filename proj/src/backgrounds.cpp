#include "plateforce/backgrounds.hpp"

#include <cmath>

#include "plateforce/error.hpp"

namespace plateforce {

namespace {

bool nearly_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

ElectrostaticConfig::ElectrostaticConfig(double stray_voltage, double area, double gap)
    : voltage_(stray_voltage), area_(area), gap_(gap) {
    detail::require_non_negative(stray_voltage, "stray voltage");
    detail::require_positive(area, "area");
    detail::require_positive(gap, "gap");
}

double electrostatic_force(const ElectrostaticConfig& cfg, const PhysicalConstants& k) {
    const double v = cfg.stray_voltage();
    const double d = cfg.gap();
    return k.epsilon0 * cfg.area() * (v * v) / (2.0 * d * d);
}

double voltage_control_requirement(const ElectrostaticConfig& cfg, double residual_target,
                                   const PhysicalConstants& k) {
    detail::require_positive(residual_target, "residual target");
    const double background = electrostatic_force(cfg, k);
    if (residual_target >= background) return 1.0;
    return std::sqrt(residual_target / background);
}

ForceBudget build_budget(const PlatePairConfig& pp, const ThermalModel& model, const ElectrostaticConfig& es,
                         const YukawaParams& y_ref, double resolution, StackMode yukawa_mode,
                         const PhysicalConstants& k) {
    detail::require_positive(resolution, "force resolution");
    const double area = pp.geometry.area();
    const double d = pp.gap.separation();
    if (!nearly_equal(area, es.area()))
        throw InvalidArgument("electrostatic area " + std::to_string(es.area()) +
                              " m^2 differs from plate area " + std::to_string(area) + " m^2");
    if (!nearly_equal(d, es.gap()))
        throw InvalidArgument("electrostatic gap " + std::to_string(es.gap()) + " m differs from plate gap " +
                              std::to_string(d) + " m");

    ForceBudget b;
    b.gap = d;
    b.casimir = casimir_zero_t(area, d, k);
    b.thermal = thermal_casimir(area, d, pp.gap.temperature(), k);
    b.reduction_factor = model.reduction_factor();
    b.total_casimir = b.casimir + model.reduction_factor() * b.thermal;
    b.newton = stack_newton(pp, k);
    // magnitude: a negative alpha is a repulsive hypothesis of the same size
    b.yukawa_hypothesis = std::abs(stack_yukawa(pp, y_ref, yukawa_mode, k));
    b.electrostatic = electrostatic_force(es, k);
    b.resolution = resolution;

    b.electrostatic_to_casimir = b.electrostatic / b.casimir;
    b.casimir_to_resolution = b.casimir / resolution;
    b.thermal_to_resolution = b.thermal / resolution;
    b.yukawa_to_resolution = b.yukawa_hypothesis / resolution;
    b.newton_to_resolution = b.newton / resolution;
    b.thermal_valid = thermal_formula_trusted(d);
    return b;
}

}  // namespace plateforce
