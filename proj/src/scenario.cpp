// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/scenario.hpp"

#include "sandlink/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

namespace sandlink {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxGridPoints = 1'000'000;

[[noreturn]] void fail(const std::string& message) {
    throw ValidationError(message);
}

const json& require_key(const json& obj, const char* key, const std::string& ctx) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(ctx + ": missing required key \"" + key + "\"");
    }
    return *it;
}

void require_object(const json& value, const std::string& ctx) {
    if (!value.is_object()) {
        fail(ctx + ": must be an object");
    }
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& ctx) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const std::string_view candidate : allowed) {
            if (item.key() == candidate) {
                known = true;
                break;
            }
        }
        if (!known) {
            std::string list;
            for (const std::string_view candidate : allowed) {
                if (!list.empty()) {
                    list += ", ";
                }
                list += candidate;
            }
            fail(ctx + ": unknown key \"" + item.key() + "\" (allowed: " + list + ")");
        }
    }
}

double as_number(const json& value, const std::string& ctx) {
    if (!value.is_number()) {
        fail(ctx + ": must be a number");
    }
    return value.get<double>();
}

double get_number(const json& obj, const char* key, const std::string& ctx) {
    return as_number(require_key(obj, key, ctx), ctx + "." + key);
}

std::string get_string(const json& obj, const char* key, const std::string& ctx) {
    const json& value = require_key(obj, key, ctx);
    if (!value.is_string()) {
        fail(ctx + "." + key + ": must be a string");
    }
    return value.get<std::string>();
}

// Reads obj[key] into dst when present, leaving dst untouched otherwise.
// Returns whether the key was present.
bool take_number(const json& obj, const char* key, double& dst, const std::string& ctx) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return false;
    }
    dst = as_number(*it, ctx + "." + key);
    return true;
}

SweepAxis parse_axis(const json& value, const std::string& ctx) {
    if (!value.is_string()) {
        fail(ctx + ": must be a string");
    }
    const std::string name = value.get<std::string>();
    for (const SweepAxis axis : {SweepAxis::Visibility, SweepAxis::ParticleRadius,
                                 SweepAxis::Humidity, SweepAxis::Distance, SweepAxis::Frequency}) {
        if (name == axis_name(axis)) {
            return axis;
        }
    }
    fail(ctx + ": unknown axis \"" + name +
         "\" (valid: visibility, particle_radius, humidity, distance, frequency)");
}

SweepOutput parse_output(const json& value, const std::string& ctx) {
    if (!value.is_string()) {
        fail(ctx + ": must be a string");
    }
    const std::string name = value.get<std::string>();
    for (const SweepOutput output : {SweepOutput::PathLoss, SweepOutput::SpecificAttenuation,
                                     SweepOutput::Margin, SweepOutput::Xpd}) {
        if (name == output_name(output)) {
            return output;
        }
    }
    fail(ctx + ": unknown output \"" + name +
         "\" (valid: path_loss, specific_attenuation, margin, xpd)");
}

std::vector<double> parse_grid(const json& value, const std::string& ctx) {
    if (value.is_array()) {
        std::vector<double> grid;
        grid.reserve(value.size());
        for (std::size_t i = 0; i < value.size(); ++i) {
            grid.push_back(as_number(value[i], ctx + "[" + std::to_string(i) + "]"));
        }
        return grid;
    }
    if (!value.is_object()) {
        fail(ctx + ": must be an array of numbers or a {start, stop, count, spacing} object");
    }
    reject_unknown_keys(value, {"start", "stop", "count", "spacing"}, ctx);
    const double start = get_number(value, "start", ctx);
    const double stop = get_number(value, "stop", ctx);
    const json& count_value = require_key(value, "count", ctx);
    if (!count_value.is_number_integer()) {
        fail(ctx + ".count: must be an integer");
    }
    const long long count = count_value.get<long long>();
    if (count < 2) {
        fail(ctx + ".count: must be >= 2");
    }
    if (static_cast<std::size_t>(count) > kMaxGridPoints) {
        fail(ctx + ".count: must be <= " + std::to_string(kMaxGridPoints));
    }
    std::string spacing = "linear";
    if (value.contains("spacing")) {
        spacing = get_string(value, "spacing", ctx);
        if (spacing != "linear" && spacing != "log") {
            fail(ctx + ".spacing: must be \"linear\" or \"log\"");
        }
    }
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
        fail(ctx + ": start must be finite and < stop");
    }
    if (spacing == "log" && !(start > 0.0)) {
        fail(ctx + ": log spacing needs start > 0");
    }

    // Endpoints are written verbatim so the grid hits start and stop exactly.
    std::vector<double> grid(static_cast<std::size_t>(count));
    const double span = stop - start;
    const double ratio = stop / start; // used only for log spacing
    const double steps = static_cast<double>(count - 1);
    grid.front() = start;
    grid.back() = stop;
    for (long long i = 1; i + 1 < count; ++i) {
        const double t = static_cast<double>(i) / steps;
        grid[static_cast<std::size_t>(i)] =
            spacing == "linear" ? start + span * t : start * std::pow(ratio, t);
    }
    return grid;
}

LinkSpec parse_link(const json& obj, SweepAxis axis, const std::string& ctx) {
    require_object(obj, ctx);
    reject_unknown_keys(obj,
                        {"preset", "name", "freq_ghz", "distance_km", "tx_power_dbm",
                         "tx_gain_dbi", "rx_gain_dbi", "rx_threshold_dbm", "antenna_height_m"},
                        ctx);

    LinkSpec link;
    bool have_preset = false;
    if (obj.contains("preset")) {
        const std::string preset = get_string(obj, "preset", ctx);
        for (const LinkSpec& candidate : preset_links()) {
            if (candidate.name == preset) {
                link = candidate;
                have_preset = true;
                break;
            }
        }
        if (!have_preset) {
            fail(ctx + ".preset: unknown preset \"" + preset + "\" (valid: ML-6363, ML-6352)");
        }
    }

    if (axis == SweepAxis::Distance && obj.contains("distance_km")) {
        fail(ctx + ".distance_km: the distance axis supplies this value; remove the key");
    }
    if (axis == SweepAxis::Frequency && obj.contains("freq_ghz")) {
        fail(ctx + ".freq_ghz: the frequency axis supplies this value; remove the key");
    }

    const auto take_required = [&](const char* key, double& dst, bool required) {
        if (!take_number(obj, key, dst, ctx) && required) {
            fail(ctx + ": missing required key \"" + key + "\"");
        }
    };
    const bool need = !have_preset;
    take_required("freq_ghz", link.freq_ghz, need && axis != SweepAxis::Frequency);
    take_required("distance_km", link.distance_km, need && axis != SweepAxis::Distance);
    take_required("tx_power_dbm", link.tx_power_dbm, need);
    take_required("tx_gain_dbi", link.tx_gain_dbi, need);
    take_required("rx_gain_dbi", link.rx_gain_dbi, need);
    take_required("rx_threshold_dbm", link.rx_threshold_dbm, need);
    take_required("antenna_height_m", link.antenna_height_m, false);
    if (obj.contains("name")) {
        link.name = get_string(obj, "name", ctx);
    }
    return link;
}

DustMedium parse_medium(const json& obj, SweepAxis axis, const std::string& ctx) {
    require_object(obj, ctx);
    reject_unknown_keys(obj,
                        {"particle_radius_um", "visibility_m", "humidity_pct", "ref_height_m",
                         "eps1", "eps2", "calibration_scale"},
                        ctx);

    if (axis == SweepAxis::Visibility && obj.contains("visibility_m")) {
        fail(ctx + ".visibility_m: the visibility axis supplies this value; remove the key");
    }
    if (axis == SweepAxis::ParticleRadius && obj.contains("particle_radius_um")) {
        fail(ctx + ".particle_radius_um: the particle_radius axis supplies this value; remove the key");
    }
    if (axis == SweepAxis::Humidity && obj.contains("humidity_pct")) {
        fail(ctx + ".humidity_pct: the humidity axis supplies this value; remove the key");
    }

    DustMedium medium;
    if (axis != SweepAxis::ParticleRadius) {
        medium.particle_radius_m = 1e-6 * get_number(obj, "particle_radius_um", ctx);
    }
    if (axis != SweepAxis::Visibility) {
        medium.visibility_km = 1e-3 * get_number(obj, "visibility_m", ctx);
    }
    medium.humidity_pct = 0.0;
    take_number(obj, "humidity_pct", medium.humidity_pct, ctx);
    medium.ref_height_m = 10.0;
    take_number(obj, "ref_height_m", medium.ref_height_m, ctx);
    medium.calibration_scale = 1.0;
    take_number(obj, "calibration_scale", medium.calibration_scale, ctx);
    medium.base_eps = ComplexPermittivity(get_number(obj, "eps1", ctx), get_number(obj, "eps2", ctx));
    return medium;
}

DifferentialPropagation parse_differential(const json& obj, const std::string& ctx) {
    require_object(obj, ctx);
    reject_unknown_keys(obj, {"atten_h_np_km", "atten_v_np_km", "phase_h_rad_km", "phase_v_rad_km"},
                        ctx);
    DifferentialPropagation diff;
    diff.atten_h_np_km = get_number(obj, "atten_h_np_km", ctx);
    diff.atten_v_np_km = get_number(obj, "atten_v_np_km", ctx);
    diff.phase_h_rad_km = get_number(obj, "phase_h_rad_km", ctx);
    diff.phase_v_rad_km = get_number(obj, "phase_v_rad_km", ctx);
    return diff;
}

SweepVariant parse_variant(const json& obj, const std::string& ctx) {
    require_object(obj, ctx);
    reject_unknown_keys(obj,
                        {"label", "humidity_pct", "particle_radius_um", "visibility_m",
                         "distance_km", "frequency_ghz", "differential"},
                        ctx);
    SweepVariant variant;
    variant.label = get_string(obj, "label", ctx);
    const auto take_optional = [&](const char* key, std::optional<double>& dst) {
        double value = 0.0;
        if (take_number(obj, key, value, ctx)) {
            dst = value;
        }
    };
    take_optional("humidity_pct", variant.humidity_pct);
    take_optional("particle_radius_um", variant.particle_radius_um);
    take_optional("visibility_m", variant.visibility_m);
    take_optional("distance_km", variant.distance_km);
    take_optional("frequency_ghz", variant.frequency_ghz);
    if (obj.contains("differential")) {
        variant.differential = parse_differential(obj.at("differential"), ctx + ".differential");
    }
    return variant;
}

bool finite_positive(double value) {
    return std::isfinite(value) && value > 0.0;
}

// The axis parameter is substituted per grid point, so structural validation
// probes the base link/medium with a placeholder in the swept slot.
void validate_base_scenario(const SweepSpec& spec) {
    LinkSpec probe_link = spec.link;
    if (spec.axis == SweepAxis::Distance) {
        probe_link.distance_km = 1.0;
    }
    if (spec.axis == SweepAxis::Frequency) {
        probe_link.freq_ghz = 1.0;
    }
    try {
        validate(probe_link);
    } catch (const Error& e) {
        fail(std::string("link: ") + e.what());
    }

    DustMedium probe_medium = spec.medium;
    switch (spec.axis) {
    case SweepAxis::Visibility: probe_medium.visibility_km = 1.0; break;
    case SweepAxis::ParticleRadius: probe_medium.particle_radius_m = 1e-6; break;
    case SweepAxis::Humidity: probe_medium.humidity_pct = 0.0; break;
    default: break;
    }
    try {
        validate(probe_medium);
    } catch (const Error& e) {
        fail(std::string("medium: ") + e.what());
    }

    if (spec.differential) {
        try {
            validate(*spec.differential);
        } catch (const Error& e) {
            fail(std::string("differential: ") + e.what());
        }
    }
}

void validate_grid(const SweepSpec& spec) {
    if (spec.grid.empty()) {
        fail("sweep.grid: must not be empty");
    }
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        const double value = spec.grid[i];
        if (!std::isfinite(value)) {
            fail("sweep.grid: values must be finite");
        }
        if (spec.axis == SweepAxis::Humidity) {
            if (value < 0.0 || value > 100.0) {
                fail("sweep.grid: humidity values must lie in [0, 100]");
            }
        } else if (!(value > 0.0)) {
            fail(std::string("sweep.grid: ") + axis_name(spec.axis) + " values must be > 0");
        }
        if (i > 0 && !(spec.grid[i - 1] < value)) {
            fail("sweep.grid: values must be strictly increasing");
        }
    }
}

void validate_variants(const SweepSpec& spec) {
    std::set<std::string> labels;
    for (std::size_t i = 0; i < spec.variants.size(); ++i) {
        const SweepVariant& variant = spec.variants[i];
        const std::string ctx = "sweep.variants[" + std::to_string(i) + "]";
        if (variant.label.empty()) {
            fail(ctx + ".label: must not be empty");
        }
        if (variant.label.find_first_of(",\"\n\r") != std::string::npos) {
            fail(ctx + ".label: must not contain commas, quotes or line breaks");
        }
        if (!labels.insert(variant.label).second) {
            fail(ctx + ".label: duplicate label \"" + variant.label + "\"");
        }

        const bool overrides_axis =
            (spec.axis == SweepAxis::Visibility && variant.visibility_m.has_value()) ||
            (spec.axis == SweepAxis::ParticleRadius && variant.particle_radius_um.has_value()) ||
            (spec.axis == SweepAxis::Humidity && variant.humidity_pct.has_value()) ||
            (spec.axis == SweepAxis::Distance && variant.distance_km.has_value()) ||
            (spec.axis == SweepAxis::Frequency && variant.frequency_ghz.has_value());
        if (overrides_axis) {
            fail(ctx + ": must not override the swept parameter " + axis_name(spec.axis));
        }

        if (variant.humidity_pct &&
            !(*variant.humidity_pct >= 0.0 && *variant.humidity_pct <= 100.0)) {
            fail(ctx + ".humidity_pct: must lie in [0, 100]");
        }
        if (variant.particle_radius_um && !finite_positive(*variant.particle_radius_um)) {
            fail(ctx + ".particle_radius_um: must be > 0");
        }
        if (variant.visibility_m && !finite_positive(*variant.visibility_m)) {
            fail(ctx + ".visibility_m: must be > 0");
        }
        if (variant.distance_km && !finite_positive(*variant.distance_km)) {
            fail(ctx + ".distance_km: must be > 0");
        }
        if (variant.frequency_ghz && !finite_positive(*variant.frequency_ghz)) {
            fail(ctx + ".frequency_ghz: must be > 0");
        }
        if (variant.differential) {
            try {
                validate(*variant.differential);
            } catch (const Error& e) {
                fail(ctx + ".differential: " + e.what());
            }
        }
    }
}

} // namespace

const char* axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::Visibility: return "visibility";
    case SweepAxis::ParticleRadius: return "particle_radius";
    case SweepAxis::Humidity: return "humidity";
    case SweepAxis::Distance: return "distance";
    case SweepAxis::Frequency: return "frequency";
    }
    return "?";
}

const char* axis_column(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::Visibility: return "visibility_m";
    case SweepAxis::ParticleRadius: return "particle_radius_um";
    case SweepAxis::Humidity: return "humidity_pct";
    case SweepAxis::Distance: return "distance_km";
    case SweepAxis::Frequency: return "frequency_ghz";
    }
    return "?";
}

const char* output_name(SweepOutput output) {
    switch (output) {
    case SweepOutput::PathLoss: return "path_loss";
    case SweepOutput::SpecificAttenuation: return "specific_attenuation";
    case SweepOutput::Margin: return "margin";
    case SweepOutput::Xpd: return "xpd";
    }
    return "?";
}

const char* output_column(SweepOutput output) {
    switch (output) {
    case SweepOutput::PathLoss: return "path_loss_db";
    case SweepOutput::SpecificAttenuation: return "specific_attenuation_db_per_km";
    case SweepOutput::Margin: return "margin_db";
    case SweepOutput::Xpd: return "xpd_db";
    }
    return "?";
}

void validate(const SweepSpec& spec) {
    validate_grid(spec);

    if (spec.outputs.empty()) {
        fail("output: must request at least one column");
    }
    std::set<SweepOutput> seen;
    for (const SweepOutput output : spec.outputs) {
        if (!seen.insert(output).second) {
            fail(std::string("output: duplicate entry \"") + output_name(output) + "\"");
        }
    }

    validate_base_scenario(spec);
    validate_variants(spec);

    const bool wants_xpd =
        seen.count(SweepOutput::Xpd) > 0;
    if (wants_xpd && !spec.differential) {
        if (spec.variants.empty()) {
            fail("output: xpd requires differential propagation rates");
        }
        for (std::size_t i = 0; i < spec.variants.size(); ++i) {
            if (!spec.variants[i].differential) {
                fail("output: xpd requires differential rates in the scenario or in every "
                     "variant; sweep.variants[" +
                     std::to_string(i) + "] has none");
            }
        }
    }
}

SweepSpec parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("scenario: top level must be an object");
    }
    reject_unknown_keys(doc, {"link", "medium", "differential", "sweep", "output"}, "scenario");

    const json& sweep = require_key(doc, "sweep", "scenario");
    require_object(sweep, "sweep");
    reject_unknown_keys(sweep, {"axis", "grid", "variants"}, "sweep");

    SweepSpec spec;
    spec.axis = parse_axis(require_key(sweep, "axis", "sweep"), "sweep.axis");
    spec.grid = parse_grid(require_key(sweep, "grid", "sweep"), "sweep.grid");
    if (sweep.contains("variants")) {
        const json& variants = sweep.at("variants");
        if (!variants.is_array()) {
            fail("sweep.variants: must be an array");
        }
        for (std::size_t i = 0; i < variants.size(); ++i) {
            spec.variants.push_back(
                parse_variant(variants[i], "sweep.variants[" + std::to_string(i) + "]"));
        }
    }

    spec.link = parse_link(require_key(doc, "link", "scenario"), spec.axis, "link");
    spec.medium = parse_medium(require_key(doc, "medium", "scenario"), spec.axis, "medium");
    if (doc.contains("differential")) {
        spec.differential = parse_differential(doc.at("differential"), "differential");
    }

    const json& outputs = require_key(doc, "output", "scenario");
    if (!outputs.is_array()) {
        fail("output: must be an array of output names");
    }
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        spec.outputs.push_back(parse_output(outputs[i], "output[" + std::to_string(i) + "]"));
    }

    validate(spec);
    return spec;
}

SweepSpec load_scenario(const std::filesystem::path& file) {
    std::ifstream stream(file, std::ios::binary);
    if (!stream) {
        throw ParseError("scenario: cannot open file " + file.string());
    }
    std::ostringstream text;
    text << stream.rdbuf();
    SweepSpec spec = parse_scenario(text.str());
    spec.name = file.stem().string();
    return spec;
}

} // namespace sandlink
