#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "plateforce/backgrounds.hpp"
#include "plateforce/balance.hpp"
#include "plateforce/casimir.hpp"
#include "plateforce/exclusion.hpp"
#include "plateforce/gravity.hpp"
#include "plateforce/model.hpp"

namespace plateforce::io {

enum class Dimension { Length, Force, Voltage, Temperature, Density, Pressure, TorqueConstant, Angle, Dimensionless };

/// Parses "12 cm", "10um", "1e-12 N", "0.1" into SI. A bare number is taken
/// as already SI. Throws InvalidArgument on an unknown or mismatched suffix.
double parse_quantity(std::string_view text, Dimension dim);

enum class TiltAxis { Length, Width };

/// Complete experiment description. Missing keys keep the defaults, which
/// describe the 10 cm x 12 cm gold-on-glass baseline at 5 um and 300 K.
struct ExperimentConfig {
    PlateGeometry geometry{0.10, 0.12};
    PlateStack stack_a{{materials::gold(10e-6), materials::glass(15e-3)}};
    PlateStack stack_b{{materials::gold(10e-6), materials::glass(15e-3)}};
    GapConfig gap{5e-6, 300.0};
    ThermalModel thermal{1.0};
    double stray_voltage = 0.1;  // V
    YukawaParams yukawa_ref{1.0, 10e-6};
    StackMode yukawa_mode = StackMode::MetalOnly;
    TorsionWire wire = TorsionWire::tungsten(50e-6);
    std::optional<double> torque_sensitivity;  // defaults to torsion_constant(wire)
    double arm_length = 0.1;           // m
    double min_displacement = 1e-9;    // m
    double tilt_angle = 1e-6;          // rad
    TiltAxis tilt_axis = TiltAxis::Width;
    double force_resolution = 1e-12;   // N
    std::optional<double> resolution_gap;  // defaults to gap.separation()

    std::uint64_t hash = 0;  ///< FNV-1a of the source text, 0 for the built-in defaults

    PlatePairConfig plate_pair() const;
    PlatePairConfig plate_pair_at(double separation) const;
    ElectrostaticConfig electrostatic() const;
    ElectrostaticConfig electrostatic_at(double separation) const;
    BalanceConfig balance() const;
    TiltConfig tilt() const;
    double tilt_cross_width() const;
    /// Layer 0 of each stack against the configured resolution.
    ResolutionSpec resolution_spec() const;
};

/// `source` names the text in error messages. Throws ParseError.
ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>");

/// Throws IoError when unreadable, ParseError when malformed.
ExperimentConfig load_config(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace plateforce::io
