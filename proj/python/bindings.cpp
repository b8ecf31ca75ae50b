#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plateforce/backgrounds.hpp"
#include "plateforce/balance.hpp"
#include "plateforce/casimir.hpp"
#include "plateforce/error.hpp"
#include "plateforce/exclusion.hpp"
#include "plateforce/gravity.hpp"
#include "plateforce/io/commands.hpp"
#include "plateforce/io/config.hpp"
#include "plateforce/io/prior.hpp"
#include "plateforce/io/table.hpp"
#include "plateforce/model.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace plateforce;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parallel-plate Casimir experiment force model";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    // InvalidArgument derives from std::invalid_argument -> ValueError

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def_readonly("hbar", &PhysicalConstants::hbar)
        .def_readonly("c", &PhysicalConstants::c)
        .def_readonly("k_B", &PhysicalConstants::k_B)
        .def_readonly("G", &PhysicalConstants::G)
        .def_readonly("epsilon0", &PhysicalConstants::epsilon0)
        .def_readonly("zeta3", &PhysicalConstants::zeta3)
        .def_property_readonly("name", [](const PhysicalConstants& k) { return std::string(k.name); });
    m.attr("CODATA2018") = kCodata2018;

    // core model
    py::class_<PlateGeometry>(m, "PlateGeometry")
        .def(py::init<double, double>(), "length"_a, "width"_a)
        .def_property_readonly("length", &PlateGeometry::length)
        .def_property_readonly("width", &PlateGeometry::width)
        .def("area", &PlateGeometry::area)
        .def("perimeter", &PlateGeometry::perimeter);
    py::class_<MaterialLayer>(m, "MaterialLayer")
        .def(py::init<std::string, double, double>(), "name"_a, "density"_a, "thickness"_a)
        .def_readonly("name", &MaterialLayer::name)
        .def_readonly("density", &MaterialLayer::density)
        .def_readonly("thickness", &MaterialLayer::thickness);
    py::class_<PlateStack>(m, "PlateStack")
        .def(py::init<std::vector<MaterialLayer>>(), "layers"_a)
        .def("__len__", &PlateStack::size)
        .def("layer_offset", &PlateStack::layer_offset, "i"_a);
    py::class_<GapConfig>(m, "GapConfig")
        .def(py::init<double, double>(), "separation"_a, "temperature"_a)
        .def_property_readonly("separation", &GapConfig::separation)
        .def_property_readonly("temperature", &GapConfig::temperature);
    py::class_<YukawaParams>(m, "YukawaParams")
        .def(py::init<double, double>(), "alpha"_a, "lambda_"_a)
        .def_property_readonly("alpha", &YukawaParams::alpha)
        .def_property_readonly("lambda_", &YukawaParams::lambda);

    // casimir
    py::class_<ThermalModel>(m, "ThermalModel")
        .def(py::init<double>(), "reduction_factor"_a = 1.0)
        .def_property_readonly("reduction_factor", &ThermalModel::reduction_factor);
    py::enum_<FieldKind>(m, "FieldKind")
        .value("Scalar", FieldKind::Scalar)
        .value("Electromagnetic", FieldKind::Electromagnetic);
    m.def("casimir_zero_t", [](double s, double d) { return casimir_zero_t(s, d); }, "area"_a, "separation"_a);
    m.def("thermal_casimir", [](double s, double d, double t) { return thermal_casimir(s, d, t); }, "area"_a,
          "separation"_a, "temperature"_a);
    m.def("total_casimir",
          [](double s, double d, double t, const ThermalModel& mdl) { return total_casimir(s, d, t, mdl); }, "area"_a,
          "separation"_a, "temperature"_a, "model"_a);
    m.def("border_correction", &border_correction, "area"_a, "perimeter"_a, "separation"_a, "kind"_a);
    m.def("thermal_formula_trusted", &thermal_formula_trusted, "separation"_a);

    // gravity
    py::class_<PointMassPair>(m, "PointMassPair").def(py::init<double, double>(), "mass_a"_a, "mass_b"_a);
    py::class_<PlatePairConfig>(m, "PlatePairConfig")
        .def(py::init<PlateStack, PlateStack, PlateGeometry, GapConfig>(), "stack_a"_a, "stack_b"_a, "geometry"_a,
             "gap"_a);
    py::enum_<StackMode>(m, "StackMode")
        .value("MetalOnly", StackMode::MetalOnly)
        .value("FullStack", StackMode::FullStack);
    m.def("point_potential", [](const PointMassPair& p, double d, const YukawaParams& y) { return point_potential(p, d, y); },
          "pair"_a, "separation"_a, "yukawa"_a);
    m.def("point_force", [](const PointMassPair& p, double d, const YukawaParams& y) { return point_force(p, d, y); },
          "pair"_a, "separation"_a, "yukawa"_a);
    m.def("plate_newton",
          [](double ra, double rb, double s, double ta, double tb) { return plate_newton(ra, rb, s, ta, tb); },
          "density_a"_a, "density_b"_a, "area"_a, "thickness_a"_a, "thickness_b"_a);
    m.def("plate_yukawa",
          [](double ra, double rb, double s, double ta, double tb, double d, const YukawaParams& y) {
              return plate_yukawa(ra, rb, s, ta, tb, d, y);
          },
          "density_a"_a, "density_b"_a, "area"_a, "thickness_a"_a, "thickness_b"_a, "separation"_a, "yukawa"_a);
    m.def("stack_yukawa",
          [](const PlatePairConfig& c, const YukawaParams& y, StackMode mode) { return stack_yukawa(c, y, mode); },
          "config"_a, "yukawa"_a, "mode"_a);

    // backgrounds
    py::class_<ElectrostaticConfig>(m, "ElectrostaticConfig")
        .def(py::init<double, double, double>(), "stray_voltage"_a, "area"_a, "gap"_a);
    py::class_<ForceBudget>(m, "ForceBudget")
        .def_readonly("gap", &ForceBudget::gap)
        .def_readonly("casimir", &ForceBudget::casimir)
        .def_readonly("thermal", &ForceBudget::thermal)
        .def_readonly("total_casimir", &ForceBudget::total_casimir)
        .def_readonly("newton", &ForceBudget::newton)
        .def_readonly("yukawa_hypothesis", &ForceBudget::yukawa_hypothesis)
        .def_readonly("electrostatic", &ForceBudget::electrostatic)
        .def_readonly("resolution", &ForceBudget::resolution)
        .def_readonly("electrostatic_to_casimir", &ForceBudget::electrostatic_to_casimir)
        .def_readonly("thermal_valid", &ForceBudget::thermal_valid);
    m.def("electrostatic_force", [](const ElectrostaticConfig& c) { return electrostatic_force(c); }, "config"_a);
    m.def("voltage_control_requirement",
          [](const ElectrostaticConfig& c, double target) { return voltage_control_requirement(c, target); },
          "config"_a, "residual_target"_a);
    m.def("build_budget",
          [](const PlatePairConfig& pp, const ThermalModel& mdl, const ElectrostaticConfig& es, const YukawaParams& y,
             double resolution, StackMode mode) { return build_budget(pp, mdl, es, y, resolution, mode); },
          "plates"_a, "model"_a, "electrostatic"_a, "yukawa_ref"_a, "resolution"_a, "mode"_a = StackMode::MetalOnly);

    // balance
    py::class_<TorsionWire>(m, "TorsionWire")
        .def(py::init<std::string, double, double, double>(), "material"_a, "shear_modulus"_a, "diameter"_a,
             "length"_a = TorsionWire::kDefaultLength)
        .def_static("tungsten", &TorsionWire::tungsten, "diameter"_a, "length"_a = TorsionWire::kDefaultLength)
        .def_static("quartz", &TorsionWire::quartz, "diameter"_a, "length"_a = TorsionWire::kDefaultLength);
    py::class_<BalanceConfig>(m, "BalanceConfig")
        .def(py::init<double, double, double>(), "torque_sensitivity"_a, "arm_length"_a, "min_displacement"_a);
    py::class_<TiltConfig>(m, "TiltConfig").def(py::init<double, double>(), "angle"_a, "plate_length"_a);
    m.def("torsion_constant", &torsion_constant, "wire"_a);
    m.def("min_detectable_force", &min_detectable_force, "balance"_a);
    m.def("gap_variation_from_tilt", &gap_variation_from_tilt, "tilt"_a);
    m.def("tilted_casimir", [](double w, double l, double d, double th) { return tilted_casimir(w, l, d, th); },
          "plate_width"_a, "plate_length"_a, "separation"_a, "angle"_a);

    // exclusion
    py::class_<ResolutionSpec>(m, "ResolutionSpec")
        .def(py::init<double, double, double, double, double, double, double>(), "force_resolution"_a, "gap"_a,
             "density_a"_a, "density_b"_a, "thickness_a"_a, "thickness_b"_a, "area"_a)
        .def("with_thickness", &ResolutionSpec::with_thickness, "thickness"_a);
    py::class_<ExclusionCurve>(m, "ExclusionCurve")
        .def_readonly("lambda_grid", &ExclusionCurve::lambda_grid)
        .def_readonly("alpha_values", &ExclusionCurve::alpha_values)
        .def_property_readonly("thickness", [](const ExclusionCurve& c) { return c.spec.thickness_a; });
    py::class_<PriorBounds>(m, "PriorBounds")
        .def(py::init([](const std::vector<std::pair<double, double>>& pts, std::string source) {
                 std::vector<BoundPoint> curve;
                 for (auto [l, a] : pts) curve.push_back({l, a});
                 return PriorBounds(std::move(curve), std::move(source));
             }),
             "points"_a, "source"_a = "")
        .def_readonly("source", &PriorBounds::source)
        .def("__len__", [](const PriorBounds& p) { return p.curve.size(); });
    m.def("alpha_bound", [](double l, const ResolutionSpec& s) { return alpha_bound(l, s); }, "lambda_"_a, "spec"_a);
    m.def("exclusion_scan",
          [](const ResolutionSpec& s, double lo, double hi, std::size_t n, const std::vector<double>& taus) {
              py::gil_scoped_release release;
              return exclusion_scan(s, lo, hi, n, taus);
          },
          "spec"_a, "lambda_min"_a, "lambda_max"_a, "n_points"_a, "thicknesses"_a);
    m.def("improvement_factor", &improvement_factor, "curve"_a, "prior"_a, "lambda_"_a);

    // io
    py::class_<io::ExperimentConfig>(m, "ExperimentConfig").def(py::init<>());
    m.def("parse_config", &io::parse_config, "text"_a, "source"_a = "<config>");
    m.def("load_config", [](const std::string& p) { return io::load_config(p); }, "path"_a);
    m.def("parse_prior_bounds", &io::parse_prior_bounds, "text"_a, "source"_a = "<prior>");
    m.def("forces_csv", [](const io::ExperimentConfig& c, const std::vector<double>& gaps) {
        return io::to_csv(io::cmd_forces(c, gaps));
    }, "config"_a, "gaps"_a);
    m.def("budget_csv", [](const io::ExperimentConfig& c) { return io::to_csv(io::cmd_budget(c)); }, "config"_a);
    m.def("sensitivity_csv", [](const io::ExperimentConfig& c) { return io::to_csv(io::cmd_sensitivity(c)); },
          "config"_a);
    m.def("exclusion_csv",
          [](const io::ExperimentConfig& c, double lo, double hi, std::size_t n, const std::vector<double>& taus,
             std::optional<PriorBounds> prior) { return io::to_csv(io::cmd_exclusion(c, lo, hi, n, taus, prior)); },
          "config"_a, "lambda_min"_a, "lambda_max"_a, "n_points"_a, "thicknesses"_a, "prior"_a = py::none());
}
