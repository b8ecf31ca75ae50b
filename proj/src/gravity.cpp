#include "plateforce/gravity.hpp"

#include <cmath>
#include <numbers>

#include "plateforce/error.hpp"

namespace plateforce {

using detail::require_positive;

namespace {

double slab_prefactor(double density_a, double density_b, double area, const PhysicalConstants& k) {
    return 2.0 * std::numbers::pi * k.G * (density_a * density_b) * area;
}

}  // namespace

PointMassPair::PointMassPair(double a, double b) : mass_a(a), mass_b(b) {
    require_positive(mass_a, "mass_a");
    require_positive(mass_b, "mass_b");
}

double point_potential(const PointMassPair& p, double separation, const YukawaParams& y,
                       const PhysicalConstants& k) {
    require_positive(separation, "separation");
    const double newton = -k.G * p.mass_a * p.mass_b / separation;
    if (y.alpha() == 0.0) return newton;
    return newton * (1.0 + y.alpha() * std::exp(-separation / y.lambda()));
}

double point_force(const PointMassPair& p, double separation, const YukawaParams& y,
                   const PhysicalConstants& k) {
    require_positive(separation, "separation");
    const double newton = k.G * p.mass_a * p.mass_b / (separation * separation);
    if (y.alpha() == 0.0) return newton;
    const double x = separation / y.lambda();
    return newton * (1.0 + y.alpha() * (1.0 + x) * std::exp(-x));
}

double plate_newton(double density_a, double density_b, double area, double thickness_a, double thickness_b,
                    const PhysicalConstants& k) {
    require_positive(density_a, "density_a");
    require_positive(density_b, "density_b");
    require_positive(area, "area");
    require_positive(thickness_a, "thickness_a");
    require_positive(thickness_b, "thickness_b");
    return slab_prefactor(density_a, density_b, area, k) * (thickness_a * thickness_b);
}

double yukawa_effective_thickness(double thickness, double lambda) {
    const double x = thickness / lambda;
    if (x < 1e-8) return thickness * (1.0 - 0.5 * x);
    return -lambda * std::expm1(-x);
}

double yukawa_unit_force(double density_a, double density_b, double area, double thickness_a,
                         double thickness_b, double separation, double lambda, const PhysicalConstants& k) {
    require_positive(density_a, "density_a");
    require_positive(density_b, "density_b");
    require_positive(area, "area");
    require_positive(thickness_a, "thickness_a");
    require_positive(thickness_b, "thickness_b");
    require_positive(separation, "separation");
    require_positive(lambda, "lambda");
    const double thick = yukawa_effective_thickness(thickness_a, lambda) *
                         yukawa_effective_thickness(thickness_b, lambda);
    return slab_prefactor(density_a, density_b, area, k) * thick * std::exp(-separation / lambda);
}

double plate_yukawa(double density_a, double density_b, double area, double thickness_a, double thickness_b,
                    double separation, const YukawaParams& y, const PhysicalConstants& k) {
    const double unit =
        yukawa_unit_force(density_a, density_b, area, thickness_a, thickness_b, separation, y.lambda(), k);
    return y.alpha() * unit;
}

double stack_yukawa(const PlatePairConfig& cfg, const YukawaParams& y, StackMode mode,
                    const PhysicalConstants& k) {
    const double area = cfg.geometry.area();
    const double d = cfg.gap.separation();
    if (mode == StackMode::MetalOnly) {
        const auto& a = cfg.stack_a[0];
        const auto& b = cfg.stack_b[0];
        return plate_yukawa(a.density, b.density, area, a.thickness, b.thickness, d, y, k);
    }
    double total = 0.0;
    for (std::size_t i = 0; i < cfg.stack_a.size(); ++i) {
        const auto& a = cfg.stack_a[i];
        for (std::size_t j = 0; j < cfg.stack_b.size(); ++j) {
            const auto& b = cfg.stack_b[j];
            const double gap = d + (cfg.stack_a.layer_offset(i) + cfg.stack_b.layer_offset(j));
            total += plate_yukawa(a.density, b.density, area, a.thickness, b.thickness, gap, y, k);
        }
    }
    return total;
}

double stack_newton(const PlatePairConfig& cfg, const PhysicalConstants& k) {
    const double area = cfg.geometry.area();
    double total = 0.0;
    for (const auto& a : cfg.stack_a.layers())
        for (const auto& b : cfg.stack_b.layers())
            total += plate_newton(a.density, b.density, area, a.thickness, b.thickness, k);
    return total;
}

}  // namespace plateforce
