#include "plateforce/balance.hpp"

#include <cmath>
#include <numbers>

#include "plateforce/casimir.hpp"
#include "plateforce/error.hpp"

namespace plateforce {

using detail::require_non_negative;
using detail::require_positive;

TorsionWire::TorsionWire(std::string material, double shear_modulus, double diameter, double length)
    : material_(std::move(material)), shear_modulus_(shear_modulus), diameter_(diameter), length_(length) {
    require_positive(shear_modulus, "shear modulus");
    require_positive(diameter, "wire diameter");
    require_positive(length, "wire length");
    detail::require(diameter >= kMinDiameter && diameter <= kMaxDiameter,
                    "wire diameter " + std::to_string(diameter) + " m outside [1e-5, 1e-3] m");
}

TorsionWire TorsionWire::tungsten(double diameter, double length) {
    return {"tungsten", kTungstenShearModulus, diameter, length};
}

TorsionWire TorsionWire::quartz(double diameter, double length) {
    return {"quartz", kQuartzShearModulus, diameter, length};
}

double default_shear_modulus(const std::string& material) {
    if (material == "tungsten") return TorsionWire::kTungstenShearModulus;
    if (material == "quartz") return TorsionWire::kQuartzShearModulus;
    throw InvalidArgument("no default shear modulus for wire material '" + material + "'");
}

BalanceConfig::BalanceConfig(double torque_sensitivity, double arm_length, double min_displacement)
    : kappa_(torque_sensitivity), arm_(arm_length), x_min_(min_displacement) {
    require_positive(torque_sensitivity, "torque sensitivity");
    require_positive(arm_length, "arm length");
    require_positive(min_displacement, "minimum displacement");
}

TiltConfig::TiltConfig(double angle, double plate_length_along_tilt)
    : angle_(angle), length_(plate_length_along_tilt) {
    require_non_negative(angle, "tilt angle");
    require_positive(plate_length_along_tilt, "plate length along tilt");
}

double torsion_constant(const TorsionWire& w) {
    const double r = 0.5 * w.diameter();
    const double r2 = r * r;
    return std::numbers::pi * w.shear_modulus() * (r2 * r2) / (2.0 * w.length());
}

double min_detectable_force(const BalanceConfig& b) {
    return b.torque_sensitivity() * b.min_displacement() / (b.arm_length() * b.arm_length());
}

double gap_variation_from_tilt(const TiltConfig& t) { return t.angle() * t.plate_length(); }

void check_no_contact(const TiltConfig& t, double gap) {
    require_positive(gap, "gap");
    const double variation = gap_variation_from_tilt(t);
    if (!(variation < gap))
        throw DomainError("tilt of " + std::to_string(t.angle()) + " rad over " + std::to_string(t.plate_length()) +
                          " m spans " + std::to_string(variation) + " m, not below the gap of " +
                          std::to_string(gap) + " m (plate contact)");
}

double tilted_casimir(double plate_width, double plate_length, double separation, double angle,
                      const PhysicalConstants& k) {
    require_positive(plate_width, "plate width");
    check_no_contact(TiltConfig(angle, plate_length), separation);
    if (angle == 0.0) return casimir_zero_t(plate_width * plate_length, separation, k);

    // (d^-3 - (d+h)^-3) / (3 theta) with h = theta l, rewritten as
    // l d^-4 * (1 - (1+e)^-3) / (3e), e = h/d, so small tilts do not cancel.
    const double e = angle * plate_length / separation;
    double shape;
    if (e < 1e-4) {
        // series of (1 - (1+e)^-3) / (3e) = 1 - 2e + 10e^2/3 - 5e^3 + ...
        shape = 1.0 + e * (-2.0 + e * (10.0 / 3.0 + e * (-5.0 + e * 7.0)));
    } else {
        const double inv = -std::expm1(-3.0 * std::log1p(e));  // 1 - (1+e)^-3
        shape = inv / (3.0 * e);
    }
    const double d2 = separation * separation;
    return k.casimir_coefficient() * plate_width * plate_length / (d2 * d2) * shape;
}

}  // namespace plateforce
