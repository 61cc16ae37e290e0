// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include "sandlink/scenario.hpp"
#include "sandlink/sweep.hpp"

#include <filesystem>
#include <string>

namespace sandlink {

/// A fully evaluated scenario: the spec plus one row per (grid point,
/// variant) combination.
struct ScenarioReport {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

/// Loads, validates and evaluates a scenario file in one step.
ScenarioReport run_scenario(const std::filesystem::path& file);

/// Fixed scientific notation with 9 significant digits and a lowercase
/// exponent, e.g. "1.64613998e-03"; non-finite values are spelled "inf",
/// "-inf", "nan". Every table cell uses this format so reruns are
/// byte-identical.
std::string format_fixed_sci(double value);

/// The report as CSV: a header line, then one line per row. First column is
/// the sweep axis (unit suffix in the header), then the variant label column
/// when the spec declares variants, then the outputs in spec order.
std::string to_csv(const ScenarioReport& report);

/// The same table as a JSON document. An infinite cell becomes null plus a
/// sibling "<column>_infinite": true marker.
std::string to_json_text(const ScenarioReport& report);

} // namespace sandlink
