#include "plateforce/io/commands.hpp"

#include <cmath>
#include <cstdio>

#include "plateforce/backgrounds.hpp"
#include "plateforce/balance.hpp"
#include "plateforce/casimir.hpp"
#include "plateforce/error.hpp"
#include "plateforce/gravity.hpp"

namespace plateforce::io {

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

const char* mode_name(StackMode m) { return m == StackMode::MetalOnly ? "metal_only" : "full_stack"; }

ResultTable base_table(const std::string& command, const ExperimentConfig& cfg) {
    ResultTable t;
    t.metadata = {
        {"command", command},
        {"constants", std::string(kCodata2018.name)},
        {"config_hash", "fnv1a64:" + hex(cfg.hash)},
        {"reduction_factor", format_number(cfg.thermal.reduction_factor())},
        {"sign_convention", "forces are magnitudes; casimir, thermal, newton and electrostatic are attractive"},
    };
    return t;
}

std::string thermal_warning(double gap) {
    return "gap " + format_number(gap) + " m is below " + format_number(kThermalValidityGap) +
           " m; thermal d^-3 expression not trusted there";
}

}  // namespace

ResultTable cmd_forces(const ExperimentConfig& cfg, std::span<const double> gaps) {
    auto t = base_table("forces", cfg);
    t.metadata.emplace_back("temperature_K", format_number(cfg.gap.temperature()));
    t.metadata.emplace_back("gravity", "plates treated as laterally infinite; newton summed over all layer pairs");
    t.columns = {{"gap", "m"},    {"casimir_zero_t", "N"}, {"thermal", "N"},     {"total", "N"},
                 {"newton", "N"}, {"electrostatic", "N"},  {"thermal_valid", "1"}};
    const double area = cfg.geometry.area();
    for (double d : gaps) {
        detail::require_positive(d, "gap");
        const auto pp = cfg.plate_pair_at(d);
        const bool valid = thermal_formula_trusted(d);
        if (!valid) t.warnings.push_back(thermal_warning(d));
        t.add_row({d, casimir_zero_t(area, d), thermal_casimir(area, d, cfg.gap.temperature()),
                   total_casimir(area, d, cfg.gap.temperature(), cfg.thermal), stack_newton(pp),
                   electrostatic_force(cfg.electrostatic_at(d)), valid ? 1.0 : 0.0});
    }
    return t;
}

ResultTable cmd_exclusion(const ExperimentConfig& cfg, double lambda_min, double lambda_max, std::size_t n_points,
                          std::span<const double> thicknesses, const std::optional<PriorBounds>& prior) {
    detail::require(!thicknesses.empty(), "at least one layer thickness is required");
    const auto spec = cfg.resolution_spec();
    const auto curves = exclusion_scan(spec, lambda_min, lambda_max, n_points, thicknesses);

    auto t = base_table("exclusion", cfg);
    t.metadata.emplace_back("force_resolution_N", format_number(spec.force_resolution));
    t.metadata.emplace_back("gap_m", format_number(spec.gap));
    t.metadata.emplace_back("density_a_kg_per_m3", format_number(spec.density_a));
    t.metadata.emplace_back("density_b_kg_per_m3", format_number(spec.density_b));
    t.metadata.emplace_back("area_m2", format_number(spec.area));
    t.metadata.emplace_back("prefactor_m2", format_number(alpha_bound_prefactor(spec)));
    {
        // reference point lambda = tau = 10 um; order-of-magnitude estimates
        // quoted in the literature for this point (~1e3) are not reproduced
        // by the exact inversion
        const double ref = alpha_bound(10e-6, spec.with_thickness(10e-6));
        t.metadata.emplace_back("reference_point",
                                "lambda_m=1e-05 thickness_m=1e-05 gap_m=" + format_number(spec.gap) +
                                    " alpha=" + format_number(ref) + " (literature estimate ~1000)");
    }
    t.columns = {{"thickness", "m"}, {"lambda", "m"}, {"alpha", "1"}};
    if (prior) {
        t.columns.push_back({"improvement", "1"});
        t.metadata.emplace_back("prior_source", prior->source);
    }
    std::size_t outside = 0;
    for (const auto& curve : curves) {
        for (std::size_t i = 0; i < curve.lambda_grid.size(); ++i) {
            std::vector<double> row{curve.spec.thickness_a, curve.lambda_grid[i], curve.alpha_values[i]};
            if (prior) {
                double factor = std::nan("");
                try {
                    factor = improvement_factor(curve, *prior, curve.lambda_grid[i]);
                } catch (const DomainError&) {
                    ++outside;
                }
                row.push_back(factor);
            }
            t.add_row(std::move(row));
        }
    }
    if (outside)
        t.warnings.push_back(std::to_string(outside) +
                             " rows lie outside the prior curve's lambda domain; improvement left as nan");
    return t;
}

ResultTable cmd_budget(const ExperimentConfig& cfg) {
    const auto pp = cfg.plate_pair();
    const auto es = cfg.electrostatic();
    const auto b = build_budget(pp, cfg.thermal, es, cfg.yukawa_ref, cfg.force_resolution, cfg.yukawa_mode);

    auto t = base_table("budget", cfg);
    t.metadata.emplace_back("temperature_K", format_number(cfg.gap.temperature()));
    t.metadata.emplace_back("yukawa_reference", "alpha=" + format_number(cfg.yukawa_ref.alpha()) +
                                                    " lambda_m=" + format_number(cfg.yukawa_ref.lambda()) +
                                                    " mode=" + mode_name(cfg.yukawa_mode));
    t.metadata.emplace_back("patch_potentials", "not modelled; less demanding at larger gaps for a fixed correlation length");
    t.metadata.emplace_back("gravity", "plates treated as laterally infinite");
    if (!b.thermal_valid) t.warnings.push_back(thermal_warning(b.gap));

    t.columns = {{"gap", "m"},
                 {"casimir_zero_t", "N"},
                 {"thermal", "N"},
                 {"total", "N"},
                 {"newton", "N"},
                 {"yukawa", "N"},
                 {"electrostatic", "N"},
                 {"resolution", "N"},
                 {"electrostatic_to_casimir", "1"},
                 {"casimir_to_resolution", "1"},
                 {"thermal_to_resolution", "1"},
                 {"yukawa_to_resolution", "1"},
                 {"newton_to_resolution", "1"},
                 {"voltage_control", "1"},
                 {"thermal_valid", "1"}};
    const double control = b.electrostatic > 0.0 ? voltage_control_requirement(es, cfg.force_resolution) : 1.0;
    t.add_row({b.gap, b.casimir, b.thermal, b.total_casimir, b.newton, b.yukawa_hypothesis, b.electrostatic,
               b.resolution, b.electrostatic_to_casimir, b.casimir_to_resolution, b.thermal_to_resolution,
               b.yukawa_to_resolution, b.newton_to_resolution, control, b.thermal_valid ? 1.0 : 0.0});
    return t;
}

ResultTable cmd_sensitivity(const ExperimentConfig& cfg) {
    const auto balance = cfg.balance();
    const auto tilt = cfg.tilt();
    const double d = cfg.gap.separation();
    check_no_contact(tilt, d);

    auto t = base_table("sensitivity", cfg);
    t.metadata.emplace_back("wire", cfg.wire.material() + " shear_modulus_Pa=" + format_number(cfg.wire.shear_modulus()) +
                                        " length_m=" + format_number(cfg.wire.length()));
    t.metadata.emplace_back("torque_sensitivity_source", cfg.torque_sensitivity ? "config" : "wire torsion constant");
    t.columns = {{"wire_diameter", "m"},
                 {"torsion_constant", "Nm_per_rad"},
                 {"torque_sensitivity", "Nm_per_rad"},
                 {"arm_length", "m"},
                 {"min_displacement", "m"},
                 {"min_force", "N"},
                 {"below_1pN", "1"},
                 {"tilt_angle", "rad"},
                 {"gap_variation", "m"},
                 {"flat_casimir", "N"},
                 {"tilted_casimir", "N"},
                 {"tilted_to_flat", "1"}};
    const double f_min = min_detectable_force(balance);
    const double width = cfg.tilt_cross_width();
    const double flat = casimir_zero_t(width * tilt.plate_length(), d);
    const double tilted = tilted_casimir(width, tilt.plate_length(), d, tilt.angle());
    t.add_row({cfg.wire.diameter(), torsion_constant(cfg.wire), balance.torque_sensitivity(), balance.arm_length(),
               balance.min_displacement(), f_min, f_min < 1e-12 ? 1.0 : 0.0, tilt.angle(), gap_variation_from_tilt(tilt),
               flat, tilted, tilt.angle() == 0.0 ? 1.0 : tilted / flat});
    return t;
}

}  // namespace plateforce::io
