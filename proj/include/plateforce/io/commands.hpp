#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "plateforce/exclusion.hpp"
#include "plateforce/io/config.hpp"
#include "plateforce/io/table.hpp"

namespace plateforce::io {

/// Every force channel at each requested gap.
ResultTable cmd_forces(const ExperimentConfig& cfg, std::span<const double> gaps);

/// Long-format exclusion curves; adds an improvement column when `prior` is given.
ResultTable cmd_exclusion(const ExperimentConfig& cfg, double lambda_min, double lambda_max, std::size_t n_points,
                          std::span<const double> thicknesses, const std::optional<PriorBounds>& prior = std::nullopt);

/// Single-row signal/background budget at the configured gap.
ResultTable cmd_budget(const ExperimentConfig& cfg);

/// Balance sensitivity and tilt effect at the configured gap.
ResultTable cmd_sensitivity(const ExperimentConfig& cfg);

}  // namespace plateforce::io
