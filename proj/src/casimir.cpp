#include "plateforce/casimir.hpp"

#include <numbers>

#include "plateforce/error.hpp"

namespace plateforce {

using detail::require_non_negative;
using detail::require_positive;

ThermalModel::ThermalModel(double reduction_factor) : eta_(reduction_factor) {
    detail::require(reduction_factor >= 0.5 && reduction_factor <= 1.0,
                    "thermal reduction factor must lie in [0.5, 1], got " + std::to_string(reduction_factor));
}

double casimir_zero_t(double area, double separation, const PhysicalConstants& k) {
    require_positive(area, "area");
    require_positive(separation, "separation");
    const double d2 = separation * separation;
    return k.casimir_coefficient() * area / (d2 * d2);
}

double thermal_casimir(double area, double separation, double temperature, const PhysicalConstants& k) {
    require_positive(area, "area");
    require_positive(separation, "separation");
    require_non_negative(temperature, "temperature");
    const double prefactor = k.zeta3 * k.k_B * temperature / (4.0 * std::numbers::pi);
    return prefactor * area / (separation * separation * separation);
}

double total_casimir(double area, double separation, double temperature, const ThermalModel& model,
                     const PhysicalConstants& k) {
    return casimir_zero_t(area, separation, k) +
           model.reduction_factor() * thermal_casimir(area, separation, temperature, k);
}

double border_correction(double area, double perimeter, double separation, FieldKind kind) {
    require_positive(area, "area");
    require_positive(perimeter, "perimeter");
    require_positive(separation, "separation");
    const double scalar = kScalarBorderCoefficient * perimeter * separation / area;
    switch (kind) {
        case FieldKind::Scalar:
            return scalar;
        case FieldKind::Electromagnetic:
            // effective-area prefactor 0.36 replaced by unity
            return scalar / kScalarEffectiveAreaPrefactor;
    }
    throw InvalidArgument("unknown field kind");
}

}  // namespace plateforce
