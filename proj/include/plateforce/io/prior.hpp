#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "plateforce/exclusion.hpp"

namespace plateforce::io {

/// Two-column "lambda_m,alpha" CSV. '#' comments and one optional header
/// line are allowed. Every bad line is reported in one ParseError.
PriorBounds parse_prior_bounds(std::string_view text, const std::string& source = "<prior>");

PriorBounds ingest_prior_bounds(const std::filesystem::path& path);

}  // namespace plateforce::io
