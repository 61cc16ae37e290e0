// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include "sandlink/depolarization.hpp"
#include "sandlink/dusty_channel.hpp"
#include "sandlink/link_budget.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sandlink {

/// Parameter a sweep walks along. Grid values are taken in the column unit:
/// meters for visibility, micrometers for particle radius, percent for
/// humidity, kilometers for distance, gigahertz for frequency.
enum class SweepAxis {
    Visibility,
    ParticleRadius,
    Humidity,
    Distance,
    Frequency,
};

enum class SweepOutput {
    PathLoss,
    SpecificAttenuation,
    Margin,
    Xpd,
};

/// Schema keyword, e.g. "visibility".
const char* axis_name(SweepAxis axis);

/// CSV column header with unit suffix, e.g. "visibility_m".
const char* axis_column(SweepAxis axis);

/// Schema keyword, e.g. "path_loss".
const char* output_name(SweepOutput output);

/// CSV column header with unit suffix, e.g. "path_loss_db".
const char* output_column(SweepOutput output);

/// One curve of a sweep: a label plus parameter overrides applied on top of
/// the base scenario before the axis value is written in. Fields left empty
/// keep the base value. A variant must not override the axis parameter.
struct SweepVariant {
    std::string label;
    std::optional<double> humidity_pct;
    std::optional<double> particle_radius_um;
    std::optional<double> visibility_m;
    std::optional<double> distance_km;
    std::optional<double> frequency_ghz;
    std::optional<DifferentialPropagation> differential;
};

/// A full sweep description: the base scenario (link, storm medium, optional
/// polarization rates), the axis with its grid, the curve variants, and the
/// output columns to evaluate. The axis parameter of `link` or `medium` is
/// ignored; the grid supplies it point by point.
struct SweepSpec {
    std::string name; // report identity; the file stem when loaded from disk
    SweepAxis axis = SweepAxis::Visibility;
    std::vector<double> grid;
    LinkSpec link;
    DustMedium medium;
    std::optional<DifferentialPropagation> differential;
    std::vector<SweepVariant> variants;
    std::vector<SweepOutput> outputs;
};

/// Structural and semantic checks: non-empty strictly increasing grid in the
/// axis domain, evaluable link/medium once the axis value is substituted,
/// variant labels usable as CSV cells, outputs computable (xpd needs
/// differential rates in the base or in every variant).
void validate(const SweepSpec& spec);

/// Parses a scenario document. Syntax errors raise ParseError; schema
/// violations (unknown keys, wrong types, missing keys, bad values) raise
/// ValidationError. The returned spec has already passed validate().
SweepSpec parse_scenario(const std::string& json_text);

/// parse_scenario over a file's contents; the file stem becomes the name.
SweepSpec load_scenario(const std::filesystem::path& file);

} // namespace sandlink
