// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace sandlink {

ScenarioReport run_scenario(const std::filesystem::path& file) {
    ScenarioReport report;
    report.spec = load_scenario(file);
    report.rows = sweep(report.spec);
    return report;
}

std::string format_fixed_sci(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0.0 ? "inf" : "-inf";
    }
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.8e", value);
    return buffer;
}

std::string to_csv(const ScenarioReport& report) {
    const SweepSpec& spec = report.spec;
    const bool with_variant = !spec.variants.empty();

    std::string out;
    out += axis_column(spec.axis);
    if (with_variant) {
        out += ",variant";
    }
    for (const SweepOutput output : spec.outputs) {
        out += ',';
        out += output_column(output);
    }
    out += '\n';

    for (const SweepRow& row : report.rows) {
        out += format_fixed_sci(row.axis_value);
        if (with_variant) {
            out += ',';
            out += spec.variants[static_cast<std::size_t>(row.variant)].label;
        }
        for (const double value : row.values) {
            out += ',';
            out += format_fixed_sci(value);
        }
        out += '\n';
    }
    return out;
}

std::string to_json_text(const ScenarioReport& report) {
    const SweepSpec& spec = report.spec;
    const bool with_variant = !spec.variants.empty();

    nlohmann::json doc;
    doc["scenario"] = spec.name;
    doc["axis"] = axis_name(spec.axis);

    nlohmann::json columns = nlohmann::json::array();
    columns.push_back(axis_column(spec.axis));
    if (with_variant) {
        columns.push_back("variant");
    }
    for (const SweepOutput output : spec.outputs) {
        columns.push_back(output_column(output));
    }
    doc["columns"] = std::move(columns);

    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : report.rows) {
        nlohmann::json cells;
        cells[axis_column(spec.axis)] = row.axis_value;
        if (with_variant) {
            cells["variant"] = spec.variants[static_cast<std::size_t>(row.variant)].label;
        }
        for (std::size_t i = 0; i < spec.outputs.size(); ++i) {
            const char* column = output_column(spec.outputs[i]);
            const double value = row.values[i];
            if (std::isinf(value) && value > 0.0) {
                cells[column] = nullptr;
                cells[std::string(column) + "_infinite"] = true;
            } else {
                cells[column] = value;
            }
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace sandlink
