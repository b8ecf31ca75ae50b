#pragma once

#include "plateforce/constants.hpp"
#include "plateforce/model.hpp"

namespace plateforce {

struct PointMassPair {
    PointMassPair(double mass_a, double mass_b);

    double mass_a;  // kg
    double mass_b;  // kg
};

/// Two layered plates facing each other across a gap. The plates are
/// treated as laterally infinite; the force is pressure times area.
struct PlatePairConfig {
    PlateStack stack_a;
    PlateStack stack_b;
    PlateGeometry geometry;
    GapConfig gap;
};

enum class StackMode {
    MetalOnly,  ///< only layer 0 of each plate
    FullStack,  ///< every layer pair, at its own effective gap
};

/// -G Ma Mb / d (1 + alpha exp(-d/lambda)), in J.
double point_potential(const PointMassPair& p, double separation, const YukawaParams& y,
                       const PhysicalConstants& k = kCodata2018);

/// G Ma Mb / d^2 (1 + alpha (1 + d/lambda) exp(-d/lambda)), the attraction along the
/// separation: minus the radial force -dV/dd, i.e. +dV/dd of point_potential.
double point_force(const PointMassPair& p, double separation, const YukawaParams& y,
                   const PhysicalConstants& k = kCodata2018);

/// Newtonian attraction of two plane-parallel slabs: 2 pi G rho_a rho_b S tau_a tau_b.
/// Independent of the gap.
double plate_newton(double density_a, double density_b, double area, double thickness_a, double thickness_b,
                    const PhysicalConstants& k = kCodata2018);

/// Yukawa attraction of two plane-parallel slabs:
/// 2 pi G rho_a rho_b S lambda^2 alpha exp(-d/lambda) (1 - exp(-tau_a/lambda)) (1 - exp(-tau_b/lambda)).
double plate_yukawa(double density_a, double density_b, double area, double thickness_a, double thickness_b,
                    double separation, const YukawaParams& y, const PhysicalConstants& k = kCodata2018);

/// plate_yukawa summed over layers according to `mode`.
double stack_yukawa(const PlatePairConfig& cfg, const YukawaParams& y, StackMode mode,
                    const PhysicalConstants& k = kCodata2018);

/// plate_newton summed over every layer pair of both stacks.
double stack_newton(const PlatePairConfig& cfg, const PhysicalConstants& k = kCodata2018);

/// lambda (1 - exp(-tau/lambda)), the effective Yukawa thickness of a slab.
/// Uses the series tau - tau^2/(2 lambda) once tau/lambda < 1e-8.
double yukawa_effective_thickness(double thickness, double lambda);

/// plate_yukawa for alpha = 1. Shared with the exclusion inversion so that
/// the two agree to rounding.
double yukawa_unit_force(double density_a, double density_b, double area, double thickness_a,
                         double thickness_b, double separation, double lambda,
                         const PhysicalConstants& k = kCodata2018);

}  // namespace plateforce
