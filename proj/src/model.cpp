#include "plateforce/model.hpp"

#include "plateforce/constants.hpp"
#include "plateforce/error.hpp"

#include <cmath>

namespace plateforce {

using detail::require_non_negative;
using detail::require_positive;

void validate(const PhysicalConstants& k) {
    require_positive(k.hbar, "hbar");
    require_positive(k.c, "c");
    require_positive(k.k_B, "k_B");
    require_positive(k.G, "G");
    require_positive(k.epsilon0, "epsilon0");
    require_positive(k.zeta3, "zeta3");
}

PlateGeometry::PlateGeometry(double length, double width) : length_(length), width_(width) {
    require_positive(length, "plate length");
    require_positive(width, "plate width");
}

MaterialLayer::MaterialLayer(std::string name_, double density_, double thickness_)
    : name(std::move(name_)), density(density_), thickness(thickness_) {
    require_positive(density, "layer density");
    require_positive(thickness, "layer thickness");
}

PlateStack::PlateStack(std::vector<MaterialLayer> layers) : layers_(std::move(layers)) {
    detail::require(!layers_.empty(), "plate stack must contain at least one layer");
    offsets_.reserve(layers_.size());
    double offset = 0.0;
    for (const auto& layer : layers_) {
        offsets_.push_back(offset);
        offset += layer.thickness;
    }
}

double PlateStack::layer_offset(std::size_t i) const {
    if (i >= offsets_.size())
        throw InvalidArgument("layer index " + std::to_string(i) + " out of range for stack of " +
                              std::to_string(offsets_.size()) + " layers");
    return offsets_[i];
}

GapConfig::GapConfig(double separation, double temperature)
    : separation_(separation), temperature_(temperature) {
    require_positive(separation, "separation");
    require_non_negative(temperature, "temperature");
}

YukawaParams::YukawaParams(double alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
    detail::require(std::isfinite(alpha), "yukawa alpha must be finite");
    require_positive(lambda, "yukawa lambda");
}

namespace materials {
MaterialLayer gold(double thickness) { return {"gold", kGoldDensity, thickness}; }
MaterialLayer glass(double thickness) { return {"glass", kGlassDensity, thickness}; }
}  // namespace materials

}  // namespace plateforce
