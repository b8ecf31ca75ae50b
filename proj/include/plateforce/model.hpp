#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace plateforce {

/// Rectangular mirror. Lengths in m.
class PlateGeometry {
public:
    PlateGeometry(double length, double width);

    double length() const noexcept { return length_; }
    double width() const noexcept { return width_; }
    double area() const noexcept { return length_ * width_; }
    double perimeter() const noexcept { return 2.0 * (length_ + width_); }

private:
    double length_;
    double width_;
};

struct MaterialLayer {
    MaterialLayer(std::string name, double density, double thickness);

    std::string name;
    double density;    // kg/m^3
    double thickness;  // m
};

/// Layers of one plate, index 0 facing the gap.
class PlateStack {
public:
    explicit PlateStack(std::vector<MaterialLayer> layers);

    std::span<const MaterialLayer> layers() const noexcept { return layers_; }
    std::size_t size() const noexcept { return layers_.size(); }
    const MaterialLayer& operator[](std::size_t i) const { return layers_.at(i); }

    /// Distance from the facing surface to the near face of layer `i`.
    double layer_offset(std::size_t i) const;

private:
    std::vector<MaterialLayer> layers_;
    std::vector<double> offsets_;
};

class GapConfig {
public:
    GapConfig(double separation, double temperature);

    double separation() const noexcept { return separation_; }
    double temperature() const noexcept { return temperature_; }

private:
    double separation_;   // m
    double temperature_;  // K, 0 allowed
};

/// Hypothetical Yukawa correction to Newtonian gravity.
class YukawaParams {
public:
    YukawaParams(double alpha, double lambda);

    double alpha() const noexcept { return alpha_; }
    double lambda() const noexcept { return lambda_; }

private:
    double alpha_;
    double lambda_;  // m
};

// Free-function spellings of the geometry accessors.
inline double area(const PlateGeometry& g) noexcept { return g.area(); }
inline double perimeter(const PlateGeometry& g) noexcept { return g.perimeter(); }
inline double layer_offset(const PlateStack& s, std::size_t i) { return s.layer_offset(i); }

/// Commonly used layers.
namespace materials {
inline constexpr double kGoldDensity = 19.3e3;
inline constexpr double kGlassDensity = 3.0e3;

MaterialLayer gold(double thickness);
MaterialLayer glass(double thickness);
}  // namespace materials

}  // namespace plateforce
