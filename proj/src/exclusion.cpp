#include "plateforce/exclusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "plateforce/error.hpp"
#include "plateforce/gravity.hpp"

namespace plateforce {

using detail::require_positive;

ResolutionSpec::ResolutionSpec(double force_resolution_, double gap_, double density_a_, double density_b_,
                               double thickness_a_, double thickness_b_, double area_)
    : force_resolution(force_resolution_), gap(gap_), density_a(density_a_), density_b(density_b_),
      thickness_a(thickness_a_), thickness_b(thickness_b_), area(area_) {
    require_positive(force_resolution, "force resolution");
    require_positive(gap, "gap");
    require_positive(density_a, "density_a");
    require_positive(density_b, "density_b");
    require_positive(thickness_a, "thickness_a");
    require_positive(thickness_b, "thickness_b");
    require_positive(area, "area");
}

ResolutionSpec ResolutionSpec::with_thickness(double thickness) const {
    return {force_resolution, gap, density_a, density_b, thickness, thickness, area};
}

ExclusionCurve::ExclusionCurve(std::vector<double> lambdas, std::vector<double> alphas, ResolutionSpec spec_)
    : lambda_grid(std::move(lambdas)), alpha_values(std::move(alphas)), spec(spec_) {
    detail::require(lambda_grid.size() == alpha_values.size(), "exclusion curve: grid and values differ in length");
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        require_positive(lambda_grid[i], "curve lambda");
        require_positive(alpha_values[i], "curve alpha");
        detail::require(std::isfinite(alpha_values[i]), "curve alpha must be finite");
        if (i > 0)
            detail::require(lambda_grid[i] > lambda_grid[i - 1], "exclusion curve: lambda grid not strictly increasing");
    }
}

PriorBounds::PriorBounds(std::vector<BoundPoint> curve_, std::string source_)
    : curve(std::move(curve_)), source(std::move(source_)) {
    detail::require(!curve.empty(), "prior bounds: empty curve");
    for (std::size_t i = 0; i < curve.size(); ++i) {
        require_positive(curve[i].lambda, "prior lambda");
        require_positive(curve[i].alpha, "prior alpha");
        if (i > 0)
            detail::require(curve[i].lambda > curve[i - 1].lambda, "prior bounds: lambda not strictly increasing");
    }
}

double alpha_bound(double lambda, const ResolutionSpec& spec, const PhysicalConstants& k) {
    const double unit = yukawa_unit_force(spec.density_a, spec.density_b, spec.area, spec.thickness_a,
                                          spec.thickness_b, spec.gap, lambda, k);
    const double alpha = spec.force_resolution / unit;
    if (!std::isfinite(alpha))
        throw DomainError("alpha bound overflows at lambda = " + std::to_string(lambda) + " m (gap/lambda = " +
                          std::to_string(spec.gap / lambda) + ")");
    return alpha;
}

double alpha_bound_prefactor(const ResolutionSpec& spec, const PhysicalConstants& k) {
    return spec.force_resolution / (2.0 * std::numbers::pi * k.G * (spec.density_a * spec.density_b) * spec.area);
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    require_positive(lo, "grid start");
    detail::require(hi > lo, "grid end must exceed grid start");
    detail::require(n >= 2, "grid needs at least 2 points");
    std::vector<double> grid(n);
    const double log_lo = std::log(lo);
    const double step = (std::log(hi) - log_lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = std::exp(log_lo + step * static_cast<double>(i));
    grid.front() = lo;
    grid.back() = hi;
    for (std::size_t i = 1; i < n; ++i)
        detail::require(grid[i] > grid[i - 1], "grid too dense for double precision");
    return grid;
}

std::vector<ExclusionCurve> exclusion_scan(const ResolutionSpec& spec, double lambda_min, double lambda_max,
                                           std::size_t n_points, std::span<const double> thicknesses,
                                           ScanExecution execution, const PhysicalConstants& k) {
    const auto grid = log_grid(lambda_min, lambda_max, n_points);
    std::vector<ResolutionSpec> specs;
    specs.reserve(thicknesses.size());
    for (double t : thicknesses) specs.push_back(spec.with_thickness(t));

    const std::size_t total = grid.size() * specs.size();
    std::vector<double> alphas(total);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx)
            alphas[idx] = alpha_bound(grid[idx % grid.size()], specs[idx / grid.size()], k);
    };

    const std::size_t workers =
        execution == ScanExecution::Parallel ? std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), total / 1024 + 1) : 1;
    if (workers <= 1) {
        fill(0, total);
    } else {
        // each point is written by exactly one thread; results do not depend on the split
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (total + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        fill(w * chunk, std::min(total, (w + 1) * chunk));
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<ExclusionCurve> curves;
    curves.reserve(specs.size());
    for (std::size_t c = 0; c < specs.size(); ++c) {
        auto first = alphas.begin() + static_cast<std::ptrdiff_t>(c * grid.size());
        curves.emplace_back(grid, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(grid.size())),
                            specs[c]);
    }
    return curves;
}

double loglog_interpolate(std::span<const double> xs, std::span<const double> ys, double x) {
    detail::require(xs.size() == ys.size() && !xs.empty(), "interpolation: mismatched or empty tables");
    if (!(x >= xs.front() && x <= xs.back()))
        throw DomainError("lambda = " + std::to_string(x) + " m outside curve domain [" + std::to_string(xs.front()) +
                          ", " + std::to_string(xs.back()) + "] m");
    const auto hi = std::lower_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<std::size_t>(hi - xs.begin());
    if (*hi == x) return ys[i];
    const double lx0 = std::log(xs[i - 1]);
    const double t = (std::log(x) - lx0) / (std::log(xs[i]) - lx0);
    const double ly0 = std::log(ys[i - 1]);
    return std::exp(ly0 + t * (std::log(ys[i]) - ly0));
}

double improvement_factor(const ExclusionCurve& curve, const PriorBounds& prior, double lambda) {
    std::vector<double> prior_x, prior_y;
    prior_x.reserve(prior.curve.size());
    prior_y.reserve(prior.curve.size());
    for (const auto& p : prior.curve) {
        prior_x.push_back(p.lambda);
        prior_y.push_back(p.alpha);
    }
    const double prior_alpha = loglog_interpolate(prior_x, prior_y, lambda);
    const double new_alpha = loglog_interpolate(curve.lambda_grid, curve.alpha_values, lambda);
    return prior_alpha / new_alpha;
}

std::size_t unimodal_minimum(std::span<const double> values) {
    constexpr auto npos = static_cast<std::size_t>(-1);
    if (values.empty()) return npos;
    std::size_t i = 0;
    while (i + 1 < values.size() && values[i + 1] < values[i]) ++i;
    const std::size_t minimum = i;
    while (i + 1 < values.size() && values[i + 1] > values[i]) ++i;
    return i + 1 == values.size() ? minimum : npos;
}

}  // namespace plateforce
