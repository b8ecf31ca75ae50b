#pragma once

#include <string>

#include "plateforce/constants.hpp"

namespace plateforce {

/// Suspension fibre of the torsion balance.
class TorsionWire {
public:
    static constexpr double kTungstenShearModulus = 1.61e11;  // Pa
    static constexpr double kQuartzShearModulus = 3.1e10;     // Pa
    static constexpr double kDefaultLength = 0.5;             // m
    static constexpr double kMinDiameter = 10e-6;
    static constexpr double kMaxDiameter = 1e-3;

    TorsionWire(std::string material, double shear_modulus, double diameter, double length = kDefaultLength);

    static TorsionWire tungsten(double diameter, double length = kDefaultLength);
    static TorsionWire quartz(double diameter, double length = kDefaultLength);

    const std::string& material() const noexcept { return material_; }
    double shear_modulus() const noexcept { return shear_modulus_; }
    double diameter() const noexcept { return diameter_; }
    double length() const noexcept { return length_; }

private:
    std::string material_;
    double shear_modulus_;
    double diameter_;
    double length_;
};

/// Shear modulus for a named wire material ("tungsten", "quartz"); throws for anything else.
double default_shear_modulus(const std::string& material);

class BalanceConfig {
public:
    BalanceConfig(double torque_sensitivity, double arm_length, double min_displacement);

    double torque_sensitivity() const noexcept { return kappa_; }
    double arm_length() const noexcept { return arm_; }
    double min_displacement() const noexcept { return x_min_; }

private:
    double kappa_;  // N m / rad
    double arm_;    // m
    double x_min_;  // m
};

/// Parallelism error about one plate axis.
class TiltConfig {
public:
    TiltConfig(double angle, double plate_length_along_tilt);

    double angle() const noexcept { return angle_; }
    double plate_length() const noexcept { return length_; }

private:
    double angle_;   // rad
    double length_;  // m
};

/// pi G_shear r^4 / (2 L).
double torsion_constant(const TorsionWire& w);

/// kappa x_min / arm^2: the force whose torque twists the arm end by x_min.
double min_detectable_force(const BalanceConfig& b);

/// Largest gap difference across the plate, angle * length.
double gap_variation_from_tilt(const TiltConfig& t);

/// Throws DomainError unless angle * plate_length < gap.
void check_no_contact(const TiltConfig& t, double gap);

/// Ideal Casimir force between a w x l plate pair with near-edge gap d and a
/// tilt theta along l, integrated strip by strip:
/// K w (d^-3 - (d + theta l)^-3) / (3 theta). theta = 0 is the flat result.
double tilted_casimir(double plate_width, double plate_length, double separation, double angle,
                      const PhysicalConstants& k = kCodata2018);

}  // namespace plateforce
