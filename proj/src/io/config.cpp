#include "plateforce/io/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <vector>

#include "plateforce/error.hpp"

namespace plateforce::io {

namespace {

struct UnitScale {
    std::string_view suffix;
    double scale;
};

std::span<const UnitScale> units_for(Dimension dim) {
    static constexpr UnitScale length[] = {{"nm", 1e-9}, {"um", 1e-6}, {"µm", 1e-6}, {"mm", 1e-3},
                                           {"cm", 1e-2}, {"m", 1.0}};
    static constexpr UnitScale force[] = {{"pN", 1e-12}, {"nN", 1e-9}, {"uN", 1e-6}, {"µN", 1e-6},
                                          {"mN", 1e-3},  {"N", 1.0}};
    static constexpr UnitScale voltage[] = {{"mV", 1e-3}, {"V", 1.0}};
    static constexpr UnitScale temperature[] = {{"K", 1.0}};
    static constexpr UnitScale density[] = {{"kg/m3", 1.0}, {"kg/m^3", 1.0}, {"g/cm3", 1e3}, {"g/cm^3", 1e3}};
    static constexpr UnitScale pressure[] = {{"Pa", 1.0}, {"MPa", 1e6}, {"GPa", 1e9}};
    static constexpr UnitScale torque[] = {{"N*m/rad", 1.0}, {"Nm/rad", 1.0}, {"uN*m/rad", 1e-6}, {"uNm/rad", 1e-6}};
    static constexpr UnitScale angle[] = {{"rad", 1.0}, {"mrad", 1e-3}, {"urad", 1e-6}, {"µrad", 1e-6}};
    switch (dim) {
        case Dimension::Length: return length;
        case Dimension::Force: return force;
        case Dimension::Voltage: return voltage;
        case Dimension::Temperature: return temperature;
        case Dimension::Density: return density;
        case Dimension::Pressure: return pressure;
        case Dimension::TorqueConstant: return torque;
        case Dimension::Angle: return angle;
        case Dimension::Dimensionless: return {};
    }
    return {};
}

std::string_view trim(std::string_view s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    const auto b = std::find_if(s.begin(), s.end(), not_space);
    const auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string_view(b, e) : std::string_view{};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

struct Entry {
    std::string value;
    int line;
};

using Section = std::multimap<std::string, Entry>;

}  // namespace

double parse_quantity(std::string_view text, Dimension dim) {
    text = trim(text);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end == text.data())
        throw InvalidArgument("expected a number, got '" + std::string(text) + "'");
    const auto suffix = trim(std::string_view(end, text.data() + text.size() - end));
    if (!std::isfinite(value)) throw InvalidArgument("value must be finite, got '" + std::string(text) + "'");
    if (suffix.empty()) return value;
    for (const auto& u : units_for(dim))
        if (u.suffix == suffix) {
            // sub-unit prefixes: divide by the exact integer so "5um" gives the same double as 5e-6
            if (u.scale < 1.0) return value / std::round(1.0 / u.scale);
            return value * u.scale;
        }
    throw InvalidArgument("unit '" + std::string(suffix) + "' not accepted here");
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path.string() + "'");
    return ss.str();
}

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines;
    std::string current;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(source, line_no, std::string(line), "unterminated section header");
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (section_lines.contains(current)) throw ParseError(source, line_no, current, "duplicate section");
            section_lines[current] = line_no;
            sections[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(source, line_no, std::string(line), "expected 'key = value'");
        if (current.empty()) throw ParseError(source, line_no, std::string(line), "key outside of any [section]");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ParseError(source, line_no, std::string(line), "empty key");
        auto& sec = sections[current];
        if (key != "layer" && sec.contains(key)) throw ParseError(source, line_no, current + "." + key, "duplicate key");
        sec.emplace(key, Entry{value, line_no});
    }

    ExperimentConfig cfg;
    cfg.hash = fnv1a64(text);

    // Values are collected first and the domain types built afterwards, so
    // that a key's default can depend on another section.
    using Handler = std::function<void(const std::string& field, const Entry&)>;
    auto quantity = [&](const std::string& field, const Entry& e, Dimension dim) {
        try {
            return parse_quantity(e.value, dim);
        } catch (const InvalidArgument& err) {
            throw ParseError(source, e.line, field, err.what());
        }
    };
    auto positive = [&](const std::string& field, const Entry& e, Dimension dim) {
        const double v = quantity(field, e, dim);
        if (!(v > 0.0)) throw ParseError(source, e.line, field, "must be > 0");
        return v;
    };

    double length = cfg.geometry.length(), width = cfg.geometry.width();
    double separation = cfg.gap.separation(), temperature = cfg.gap.temperature();
    double eta = cfg.thermal.reduction_factor();
    double alpha = cfg.yukawa_ref.alpha(), lambda = cfg.yukawa_ref.lambda();
    std::string wire_material = cfg.wire.material();
    std::optional<double> shear;
    double wire_diameter = cfg.wire.diameter(), wire_length = cfg.wire.length();
    std::vector<MaterialLayer> layers_a, layers_b;

    auto layer_handler = [&](std::vector<MaterialLayer>& out) {
        return [&, &out = out](const std::string& field, const Entry& e) {
            const auto parts = split(e.value, ',');
            if (parts.size() != 3)
                throw ParseError(source, e.line, field, "expected 'name, density, thickness'");
            Entry density{std::string(parts[1]), e.line}, thickness{std::string(parts[2]), e.line};
            out.emplace_back(std::string(parts[0]), positive(field + ".density", density, Dimension::Density),
                             positive(field + ".thickness", thickness, Dimension::Length));
        };
    };

    const std::map<std::string, std::map<std::string, Handler>> schema = {
        {"geometry",
         {{"length", [&](auto& f, auto& e) { length = positive(f, e, Dimension::Length); }},
          {"width", [&](auto& f, auto& e) { width = positive(f, e, Dimension::Length); }}}},
        {"plate_a", {{"layer", layer_handler(layers_a)}}},
        {"plate_b", {{"layer", layer_handler(layers_b)}}},
        {"gap",
         {{"separation", [&](auto& f, auto& e) { separation = positive(f, e, Dimension::Length); }},
          {"temperature",
           [&](auto& f, auto& e) {
               temperature = quantity(f, e, Dimension::Temperature);
               if (!(temperature >= 0.0)) throw ParseError(source, e.line, f, "must be >= 0");
           }}}},
        {"thermal",
         {{"reduction_factor",
           [&](auto& f, auto& e) {
               eta = quantity(f, e, Dimension::Dimensionless);
               if (!(eta >= 0.5 && eta <= 1.0)) throw ParseError(source, e.line, f, "must lie in [0.5, 1]");
           }}}},
        {"electrostatic",
         {{"stray_voltage",
           [&](auto& f, auto& e) {
               cfg.stray_voltage = quantity(f, e, Dimension::Voltage);
               if (!(cfg.stray_voltage >= 0.0)) throw ParseError(source, e.line, f, "must be >= 0");
           }}}},
        {"yukawa",
         {{"alpha", [&](auto& f, auto& e) { alpha = quantity(f, e, Dimension::Dimensionless); }},
          {"lambda", [&](auto& f, auto& e) { lambda = positive(f, e, Dimension::Length); }},
          {"mode",
           [&](auto& f, auto& e) {
               if (e.value == "metal_only") cfg.yukawa_mode = StackMode::MetalOnly;
               else if (e.value == "full_stack") cfg.yukawa_mode = StackMode::FullStack;
               else throw ParseError(source, e.line, f, "expected 'metal_only' or 'full_stack'");
           }}}},
        {"wire",
         {{"material", [&](auto&, auto& e) { wire_material = e.value; }},
          {"shear_modulus", [&](auto& f, auto& e) { shear = positive(f, e, Dimension::Pressure); }},
          {"diameter", [&](auto& f, auto& e) { wire_diameter = positive(f, e, Dimension::Length); }},
          {"length", [&](auto& f, auto& e) { wire_length = positive(f, e, Dimension::Length); }}}},
        {"balance",
         {{"torque_sensitivity",
           [&](auto& f, auto& e) { cfg.torque_sensitivity = positive(f, e, Dimension::TorqueConstant); }},
          {"arm_length", [&](auto& f, auto& e) { cfg.arm_length = positive(f, e, Dimension::Length); }},
          {"min_displacement", [&](auto& f, auto& e) { cfg.min_displacement = positive(f, e, Dimension::Length); }}}},
        {"tilt",
         {{"angle",
           [&](auto& f, auto& e) {
               cfg.tilt_angle = quantity(f, e, Dimension::Angle);
               if (!(cfg.tilt_angle >= 0.0)) throw ParseError(source, e.line, f, "must be >= 0");
           }},
          {"axis",
           [&](auto& f, auto& e) {
               if (e.value == "length") cfg.tilt_axis = TiltAxis::Length;
               else if (e.value == "width") cfg.tilt_axis = TiltAxis::Width;
               else throw ParseError(source, e.line, f, "expected 'length' or 'width'");
           }}}},
        {"resolution",
         {{"force", [&](auto& f, auto& e) { cfg.force_resolution = positive(f, e, Dimension::Force); }},
          {"gap", [&](auto& f, auto& e) { cfg.resolution_gap = positive(f, e, Dimension::Length); }}}},
    };

    for (const auto& [name, entries] : sections) {
        const auto sec = schema.find(name);
        if (sec == schema.end()) throw ParseError(source, section_lines[name], name, "unknown section");
        for (const auto& [key, entry] : entries) {
            const auto handler = sec->second.find(key);
            const std::string field = name + "." + key;
            if (handler == sec->second.end()) throw ParseError(source, entry.line, field, "unknown key");
            handler->second(field, entry);
        }
    }

    auto build = [&](const std::string& section, auto&& make) {
        try {
            make();
        } catch (const InvalidArgument& err) {
            const auto it = section_lines.find(section);
            throw ParseError(source, it == section_lines.end() ? 0 : it->second, section, err.what());
        }
    };
    build("geometry", [&] { cfg.geometry = PlateGeometry(length, width); });
    if (!layers_a.empty()) cfg.stack_a = PlateStack(std::move(layers_a));
    if (!layers_b.empty()) cfg.stack_b = PlateStack(std::move(layers_b));
    build("gap", [&] { cfg.gap = GapConfig(separation, temperature); });
    build("thermal", [&] { cfg.thermal = ThermalModel(eta); });
    build("yukawa", [&] { cfg.yukawa_ref = YukawaParams(alpha, lambda); });
    build("wire", [&] {
        cfg.wire = TorsionWire(wire_material, shear ? *shear : default_shear_modulus(wire_material), wire_diameter,
                               wire_length);
    });
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    return parse_config(read_file(path), path.string());
}

PlatePairConfig ExperimentConfig::plate_pair() const { return plate_pair_at(gap.separation()); }

PlatePairConfig ExperimentConfig::plate_pair_at(double separation) const {
    return {stack_a, stack_b, geometry, GapConfig(separation, gap.temperature())};
}

ElectrostaticConfig ExperimentConfig::electrostatic() const { return electrostatic_at(gap.separation()); }

ElectrostaticConfig ExperimentConfig::electrostatic_at(double separation) const {
    return {stray_voltage, geometry.area(), separation};
}

BalanceConfig ExperimentConfig::balance() const {
    return {torque_sensitivity ? *torque_sensitivity : torsion_constant(wire), arm_length, min_displacement};
}

TiltConfig ExperimentConfig::tilt() const {
    return {tilt_angle, tilt_axis == TiltAxis::Width ? geometry.width() : geometry.length()};
}

double ExperimentConfig::tilt_cross_width() const {
    return tilt_axis == TiltAxis::Width ? geometry.length() : geometry.width();
}

ResolutionSpec ExperimentConfig::resolution_spec() const {
    return {force_resolution,     resolution_gap ? *resolution_gap : gap.separation(),
            stack_a[0].density,   stack_b[0].density,
            stack_a[0].thickness, stack_b[0].thickness,
            geometry.area()};
}

}  // namespace plateforce::io
