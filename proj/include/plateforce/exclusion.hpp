#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "plateforce/constants.hpp"

namespace plateforce {

/// What the experiment resolves, and the slabs it resolves it with.
struct ResolutionSpec {
    ResolutionSpec(double force_resolution, double gap, double density_a, double density_b, double thickness_a,
                   double thickness_b, double area);

    /// Same spec with both slab thicknesses replaced.
    ResolutionSpec with_thickness(double thickness) const;

    double force_resolution;  // N
    double gap;               // m
    double density_a;         // kg/m^3
    double density_b;
    double thickness_a;  // m
    double thickness_b;
    double area;  // m^2
};

/// alpha_min(lambda): parameters above the curve would have produced a
/// force larger than the resolution.
struct ExclusionCurve {
    ExclusionCurve(std::vector<double> lambda_grid, std::vector<double> alpha_values, ResolutionSpec spec);

    std::vector<double> lambda_grid;
    std::vector<double> alpha_values;
    ResolutionSpec spec;
};

struct BoundPoint {
    double lambda;
    double alpha;
};

/// Previously published exclusion curve, strictly increasing in lambda.
struct PriorBounds {
    PriorBounds(std::vector<BoundPoint> curve, std::string source);

    std::vector<BoundPoint> curve;
    std::string source;
};

enum class ScanExecution { Sequential, Parallel };

/// Exact inversion of the slab Yukawa force: the alpha at which
/// plate_yukawa(...) equals the force resolution.
double alpha_bound(double lambda, const ResolutionSpec& spec, const PhysicalConstants& k = kCodata2018);

/// F_res / (2 pi G rho_a rho_b S), in m^2: the lambda-independent prefactor of
/// alpha_bound in the thin-layer form.
double alpha_bound_prefactor(const ResolutionSpec& spec, const PhysicalConstants& k = kCodata2018);

/// n log-spaced points; the endpoints are exactly lo and hi.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// One curve per thickness (applied to both slabs), all on the same log grid.
/// Parallel execution yields bit-identical curves.
std::vector<ExclusionCurve> exclusion_scan(const ResolutionSpec& spec, double lambda_min, double lambda_max,
                                           std::size_t n_points, std::span<const double> thicknesses,
                                           ScanExecution execution = ScanExecution::Parallel,
                                           const PhysicalConstants& k = kCodata2018);

/// Piecewise-linear interpolation in (log x, log y). Throws DomainError outside [xs.front(), xs.back()].
double loglog_interpolate(std::span<const double> xs, std::span<const double> ys, double x);

/// prior_alpha(lambda) / new_alpha(lambda); > 1 means the new curve is stronger.
double improvement_factor(const ExclusionCurve& curve, const PriorBounds& prior, double lambda);

/// Index of the smallest value when the sequence falls then rises at most
/// once (a monotone sequence qualifies); npos when it is not unimodal.
std::size_t unimodal_minimum(std::span<const double> values);

}  // namespace plateforce
