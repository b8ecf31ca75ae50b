#pragma once

#include <numbers>
#include <string_view>

namespace plateforce {

/// Fundamental constants used by every force formula, SI units.
///
/// The default set is CODATA-2018 (G rounded to 6.674e-11). Every physics
/// function takes a `const PhysicalConstants&` as its last argument with the
/// CODATA set as default; tests swap constants through that parameter only.
struct PhysicalConstants {
    double hbar;      // J s
    double c;         // m/s
    double k_B;       // J/K
    double G;         // m^3 kg^-1 s^-2
    double epsilon0;  // F/m
    double zeta3;     // Apery's constant

    std::string_view name;

    /// pi^2 hbar c / 240, the ideal-mirror Casimir pressure coefficient (J m).
    constexpr double casimir_coefficient() const { return std::numbers::pi * std::numbers::pi * hbar * c / 240.0; }
};

inline constexpr PhysicalConstants kCodata2018{
    .hbar = 1.054571817e-34,
    .c = 2.99792458e8,
    .k_B = 1.380649e-23,
    .G = 6.674e-11,
    .epsilon0 = 8.8541878128e-12,
    .zeta3 = 1.2020569032,
    .name = "CODATA-2018",
};

/// Throws InvalidArgument unless every constant is strictly positive.
void validate(const PhysicalConstants& k);

}  // namespace plateforce
