#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plateforce/error.hpp"
#include "plateforce/io/commands.hpp"
#include "plateforce/io/config.hpp"
#include "plateforce/io/prior.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kIo = 4 };

namespace pio = plateforce::io;

std::vector<double> parse_lengths(const std::vector<std::string>& raw) {
    std::vector<double> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.push_back(pio::parse_quantity(s, pio::Dimension::Length));
    return out;
}

void emit(const pio::ResultTable& table, const std::string& out_path) {
    const auto text = pio::to_csv(table);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw plateforce::IoError("cannot open '" + out_path + "' for writing");
    out << text;
    if (!out) throw plateforce::IoError("error writing '" + out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parallel-plate Casimir experiment: forces, backgrounds, balance sensitivity and Yukawa exclusion"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "Experiment configuration file")->required();
        cmd->add_option("--out", out_path, "Output CSV path (default stdout)");
    };

    auto* forces = app.add_subcommand("forces", "Force channels at one or more gaps");
    add_common(forces);
    std::vector<std::string> gap_args;
    forces->add_option("--gap", gap_args, "Gap with unit suffix, e.g. 5um (repeatable; default from config)");

    auto* budget = app.add_subcommand("budget", "Signal/background budget at the configured gap");
    add_common(budget);

    auto* exclusion = app.add_subcommand("exclusion", "Yukawa alpha-lambda exclusion curves");
    add_common(exclusion);
    std::string lambda_min = "1um", lambda_max = "1cm";
    std::size_t points = 1000;
    std::vector<std::string> thickness_args;
    std::string prior_path;
    exclusion->add_option("--lambda-min", lambda_min, "Smallest Yukawa range")->capture_default_str();
    exclusion->add_option("--lambda-max", lambda_max, "Largest Yukawa range")->capture_default_str();
    exclusion->add_option("--points", points, "Log-spaced grid points per curve")->capture_default_str();
    exclusion->add_option("--thickness", thickness_args, "Layer thickness (repeatable; default 0.3, 1, 3, 10 um)");
    exclusion->add_option("--prior", prior_path, "Prior bounds CSV (lambda_m,alpha)");

    auto* sensitivity = app.add_subcommand("sensitivity", "Torsion balance sensitivity and tilt effect");
    add_common(sensitivity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        const auto cfg = pio::load_config(config_path);
        if (forces->parsed()) {
            const auto gaps = gap_args.empty() ? std::vector<double>{cfg.gap.separation()} : parse_lengths(gap_args);
            emit(pio::cmd_forces(cfg, gaps), out_path);
        } else if (budget->parsed()) {
            emit(pio::cmd_budget(cfg), out_path);
        } else if (exclusion->parsed()) {
            const auto thicknesses =
                thickness_args.empty() ? std::vector<double>{0.3e-6, 1e-6, 3e-6, 10e-6} : parse_lengths(thickness_args);
            std::optional<plateforce::PriorBounds> prior;
            if (!prior_path.empty()) prior = pio::ingest_prior_bounds(prior_path);
            emit(pio::cmd_exclusion(cfg, pio::parse_quantity(lambda_min, pio::Dimension::Length),
                                    pio::parse_quantity(lambda_max, pio::Dimension::Length), points, thicknesses, prior),
                 out_path);
        } else if (sensitivity->parsed()) {
            emit(pio::cmd_sensitivity(cfg), out_path);
        }
    } catch (const plateforce::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const plateforce::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const plateforce::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const plateforce::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kOk;
}
