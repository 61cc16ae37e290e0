// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

// Command-line front end: scenario sweeps to CSV, preset listings, and
// one-shot attenuation / path-loss / depolarization / budget calculations.
//
// Exit codes: 0 success, 2 unreadable input or bad command line, 3 schema
// violation, 4 numeric failure while evaluating, 1 anything else.

#include "sandlink/depolarization.hpp"
#include "sandlink/dusty_channel.hpp"
#include "sandlink/errors.hpp"
#include "sandlink/link_budget.hpp"
#include "sandlink/path_loss.hpp"
#include "sandlink/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>

namespace {

namespace fs = std::filesystem;

struct DustFlags {
    double radius_um = 94.43;  // [um] coarsest bundled sample's mean radius
    double humidity_pct = 0.0; // [%]
    double eps1 = 6.3485;      // regional dust blend, dry
    double eps2 = 0.0929;
    double ref_height_m = 10.0; // [m]
    double scale = 1.0;
};

// The one-shot subcommands share the storm description; --vis stays separate
// because its presence switches pathloss/budget from clear air to storm.
void add_dust_flags(CLI::App* cmd, DustFlags& dust) {
    cmd->add_option("--radius", dust.radius_um, "Particle radius [um]")
        ->capture_default_str();
    cmd->add_option("--humidity", dust.humidity_pct, "Relative humidity [%]")
        ->capture_default_str();
    cmd->add_option("--eps1", dust.eps1, "Dielectric constant of the dust")
        ->capture_default_str();
    cmd->add_option("--eps2", dust.eps2, "Loss factor of the dust")->capture_default_str();
    cmd->add_option("--ref-height", dust.ref_height_m, "Height of the visibility observation [m]")
        ->capture_default_str();
    cmd->add_option("--scale", dust.scale, "Calibration multiplier on the attenuation")
        ->capture_default_str();
}

sandlink::DustMedium medium_from_flags(const DustFlags& dust, double visibility_km) {
    sandlink::DustMedium medium;
    medium.particle_radius_m = 1e-6 * dust.radius_um;
    medium.visibility_km = visibility_km;
    medium.ref_height_m = dust.ref_height_m;
    medium.humidity_pct = dust.humidity_pct;
    medium.base_eps = sandlink::ComplexPermittivity(dust.eps1, dust.eps2);
    medium.calibration_scale = dust.scale;
    return medium;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    stream << content;
    if (!stream) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

void print_value(const char* label, double value, const char* unit) {
    std::printf("%s: %s %s\n", label, sandlink::format_fixed_sci(value).c_str(), unit);
}

void run_command(const std::string& scenario_path, const std::string& out_dir, bool also_json) {
    const sandlink::ScenarioReport report = sandlink::run_scenario(scenario_path);
    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    fs::create_directories(dir);
    const std::string stem = fs::path(scenario_path).stem().string();

    const fs::path csv_path = dir / (stem + ".csv");
    write_file(csv_path, sandlink::to_csv(report));
    std::printf("wrote %s (%zu rows)\n", csv_path.string().c_str(), report.rows.size());

    if (also_json) {
        const fs::path json_path = dir / (stem + ".json");
        write_file(json_path, sandlink::to_json_text(report));
        std::printf("wrote %s\n", json_path.string().c_str());
    }
}

void presets_command() {
    std::printf("links:\n");
    for (const sandlink::LinkSpec& link : sandlink::preset_links()) {
        std::printf("  %s: %g GHz, %g km, tx %g dBm, gains %g/%g dBi, threshold %g dBm, "
                    "height %g m\n",
                    link.name.c_str(), link.freq_ghz, link.distance_km, link.tx_power_dbm,
                    link.tx_gain_dbi, link.rx_gain_dbi, link.rx_threshold_dbm,
                    link.antenna_height_m);
    }
    std::printf("dust samples:\n");
    for (const sandlink::DustSample& sample : sandlink::preset_dust_samples()) {
        std::printf("  %s: radius avg %g um, max %g um\n", sample.name.c_str(),
                    1e6 * sample.radius_avg_m, 1e6 * sample.radius_max_m);
    }
    const sandlink::ComplexPermittivity region = sandlink::region_permittivity();
    const sandlink::ComplexPermittivity dry = sandlink::dry_dust_permittivity();
    const sandlink::ComplexPermittivity wet = sandlink::wet_dust_permittivity();
    std::printf("permittivity presets:\n");
    std::printf("  region blend (dry): eps1 %g, eps2 %g, bulk density %g g/m^3\n", region.eps1,
                region.eps2, sandlink::kRegionDustDensityGm3);
    std::printf("  laboratory dry: eps1 %g, eps2 %g\n", dry.eps1, dry.eps2);
    std::printf("  laboratory 4%% water: eps1 %g, eps2 %g\n", wet.eps1, wet.eps2);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dust-storm impairment engine for mm-wave terrestrial links"};
    app.require_subcommand(1);

    // run
    std::string scenario_path;
    std::string out_dir;
    bool also_json = false;
    CLI::App* run = app.add_subcommand("run", "Evaluate a scenario file and write its CSV table");
    run->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
    run->add_option("--out", out_dir, "Output directory (default: current directory)");
    run->add_flag("--json", also_json, "Also write the table as a JSON document");
    run->callback([&]() { run_command(scenario_path, out_dir, also_json); });

    // presets
    CLI::App* presets =
        app.add_subcommand("presets", "List the bundled link, dust and permittivity presets");
    presets->callback([]() { presets_command(); });

    // atten
    DustFlags atten_dust;
    double atten_freq = 0.0;
    double atten_vis_km = 0.0;
    double atten_height_m = 10.0;
    CLI::App* atten = app.add_subcommand("atten", "Specific attenuation of a dusty medium");
    atten->add_option("--freq", atten_freq, "Carrier frequency [GHz]")->required();
    atten->add_option("--vis", atten_vis_km, "Visibility at the reference height [km]")->required();
    atten->add_option("--height", atten_height_m, "Propagation height [m]")->capture_default_str();
    add_dust_flags(atten, atten_dust);
    atten->callback([&]() {
        const double value = sandlink::specific_attenuation(
            medium_from_flags(atten_dust, atten_vis_km), atten_freq, atten_height_m);
        print_value("specific attenuation", value, "dB/km");
    });

    // pathloss
    DustFlags pl_dust;
    double pl_freq = 0.0;
    double pl_dist_km = 0.0;
    double pl_vis_km = 0.0;
    double pl_height_m = 10.0;
    CLI::App* pathloss =
        app.add_subcommand("pathloss", "Path loss over a distance, clear or dusty");
    pathloss->add_option("--freq", pl_freq, "Carrier frequency [GHz]")->required();
    pathloss->add_option("--dist", pl_dist_km, "Path length [km]")->required();
    CLI::Option* pl_vis_opt =
        pathloss->add_option("--vis", pl_vis_km, "Visibility [km]; omit for clear air");
    pathloss->add_option("--height", pl_height_m, "Propagation height [m]")->capture_default_str();
    add_dust_flags(pathloss, pl_dust);
    pathloss->callback([&]() {
        double atten_db = 0.0;
        if (pl_vis_opt->count() > 0) {
            atten_db = sandlink::specific_attenuation(medium_from_flags(pl_dust, pl_vis_km),
                                                      pl_freq, pl_height_m) *
                       pl_dist_km;
        }
        const sandlink::PathLossBreakdown loss =
            sandlink::total_path_loss(pl_freq, pl_dist_km, atten_db);
        print_value("fspl", loss.fspl_db, "dB");
        print_value("dust attenuation", loss.dust_attenuation_db, "dB");
        print_value("total path loss", loss.total_db, "dB");
    });

    // xpd
    double xpd_dist_km = 0.0;
    sandlink::DifferentialPropagation xpd_diff;
    CLI::App* xpd_cmd =
        app.add_subcommand("xpd", "Cross-polarization discrimination over a path");
    xpd_cmd->add_option("--dist", xpd_dist_km, "Path length [km]")->required();
    xpd_cmd->add_option("--atten-h", xpd_diff.atten_h_np_km, "Horizontal attenuation rate [Np/km]")
        ->required();
    xpd_cmd->add_option("--atten-v", xpd_diff.atten_v_np_km, "Vertical attenuation rate [Np/km]")
        ->required();
    xpd_cmd->add_option("--phase-h", xpd_diff.phase_h_rad_km, "Horizontal phase rate [rad/km]")
        ->required();
    xpd_cmd->add_option("--phase-v", xpd_diff.phase_v_rad_km, "Vertical phase rate [rad/km]")
        ->required();
    xpd_cmd->callback([&]() {
        print_value("xpd", sandlink::xpd_over_path(xpd_diff, xpd_dist_km), "dB");
    });

    // budget
    DustFlags budget_dust;
    std::string budget_preset;
    double budget_freq = 0.0;
    double budget_dist_km = 0.0;
    double budget_tx_power = 0.0;
    double budget_tx_gain = 0.0;
    double budget_rx_gain = 0.0;
    double budget_threshold = 0.0;
    double budget_height_m = 10.0;
    double budget_vis_km = 0.0;
    CLI::App* budget = app.add_subcommand("budget", "Fade margin of a link, clear or dusty");
    CLI::Option* b_preset =
        budget->add_option("--preset", budget_preset, "Start from a bundled link (ML-6363, ML-6352)");
    CLI::Option* b_freq = budget->add_option("--freq", budget_freq, "Carrier frequency [GHz]");
    CLI::Option* b_dist = budget->add_option("--dist", budget_dist_km, "Path length [km]");
    CLI::Option* b_tx_power = budget->add_option("--tx-power", budget_tx_power, "Transmit power [dBm]");
    CLI::Option* b_tx_gain = budget->add_option("--tx-gain", budget_tx_gain, "Transmit gain [dBi]");
    CLI::Option* b_rx_gain = budget->add_option("--rx-gain", budget_rx_gain, "Receive gain [dBi]");
    CLI::Option* b_threshold =
        budget->add_option("--threshold", budget_threshold, "Receiver threshold [dBm]");
    CLI::Option* b_height = budget->add_option("--height", budget_height_m, "Antenna height [m]");
    CLI::Option* b_vis =
        budget->add_option("--vis", budget_vis_km, "Visibility [km]; omit for clear air");
    add_dust_flags(budget, budget_dust);
    budget->callback([&]() {
        sandlink::LinkSpec link;
        if (b_preset->count() > 0) {
            bool found = false;
            for (const sandlink::LinkSpec& candidate : sandlink::preset_links()) {
                if (candidate.name == budget_preset) {
                    link = candidate;
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw sandlink::ValidationError("budget: unknown preset \"" + budget_preset +
                                                "\" (valid: ML-6363, ML-6352)");
            }
        } else {
            const std::pair<CLI::Option*, const char*> required_flags[] = {
                {b_freq, "--freq"},       {b_dist, "--dist"},
                {b_tx_power, "--tx-power"}, {b_tx_gain, "--tx-gain"},
                {b_rx_gain, "--rx-gain"},   {b_threshold, "--threshold"}};
            for (const auto& [option, name] : required_flags) {
                if (option->count() == 0) {
                    throw sandlink::ValidationError(std::string("budget: ") + name +
                                                    " is required without --preset");
                }
            }
        }
        if (b_freq->count() > 0) link.freq_ghz = budget_freq;
        if (b_dist->count() > 0) link.distance_km = budget_dist_km;
        if (b_tx_power->count() > 0) link.tx_power_dbm = budget_tx_power;
        if (b_tx_gain->count() > 0) link.tx_gain_dbi = budget_tx_gain;
        if (b_rx_gain->count() > 0) link.rx_gain_dbi = budget_rx_gain;
        if (b_threshold->count() > 0) link.rx_threshold_dbm = budget_threshold;
        if (b_height->count() > 0) link.antenna_height_m = budget_height_m;

        sandlink::BudgetResult result;
        if (b_vis->count() > 0) {
            const sandlink::DustMedium medium = medium_from_flags(budget_dust, budget_vis_km);
            result = sandlink::evaluate(link, sandlink::uniform_storm(medium, link.distance_km));
        } else {
            result = sandlink::evaluate(link);
        }
        if (!link.name.empty()) {
            std::printf("link: %s\n", link.name.c_str());
        }
        print_value("fspl", result.loss.fspl_db, "dB");
        print_value("dust attenuation", result.loss.dust_attenuation_db, "dB");
        print_value("total path loss", result.loss.total_db, "dB");
        print_value("rx power", result.rx_power_dbm, "dBm");
        print_value("margin", result.margin_db, "dB");
        std::printf("link state: %s\n", result.link_up ? "up" : "down");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sandlink::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const sandlink::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const sandlink::ComputeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
