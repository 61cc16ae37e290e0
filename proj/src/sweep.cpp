// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/sweep.hpp"

#include "sandlink/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace sandlink {

namespace {

/// Base scenario with the variant overrides and the axis value substituted.
struct ResolvedPoint {
    LinkSpec link;
    DustMedium medium;
    const DifferentialPropagation* differential = nullptr;
};

ResolvedPoint resolve_point(const SweepSpec& spec, double axis_value, std::size_t variant_index) {
    ResolvedPoint point;
    point.link = spec.link;
    point.medium = spec.medium;
    point.differential = spec.differential ? &*spec.differential : nullptr;

    if (!spec.variants.empty()) {
        const SweepVariant& variant = spec.variants[variant_index];
        if (variant.humidity_pct) {
            point.medium.humidity_pct = *variant.humidity_pct;
        }
        if (variant.particle_radius_um) {
            point.medium.particle_radius_m = 1e-6 * *variant.particle_radius_um;
        }
        if (variant.visibility_m) {
            point.medium.visibility_km = 1e-3 * *variant.visibility_m;
        }
        if (variant.distance_km) {
            point.link.distance_km = *variant.distance_km;
        }
        if (variant.frequency_ghz) {
            point.link.freq_ghz = *variant.frequency_ghz;
        }
        if (variant.differential) {
            point.differential = &*variant.differential;
        }
    }

    switch (spec.axis) {
    case SweepAxis::Visibility: point.medium.visibility_km = 1e-3 * axis_value; break;
    case SweepAxis::ParticleRadius: point.medium.particle_radius_m = 1e-6 * axis_value; break;
    case SweepAxis::Humidity: point.medium.humidity_pct = axis_value; break;
    case SweepAxis::Distance: point.link.distance_km = axis_value; break;
    case SweepAxis::Frequency: point.link.freq_ghz = axis_value; break;
    }
    return point;
}

std::vector<double> evaluate_outputs(const SweepSpec& spec, const ResolvedPoint& point) {
    std::vector<double> values;
    values.reserve(spec.outputs.size());

    // Path loss and margin come from the same budget evaluation; computed
    // once even when both columns are requested.
    bool have_budget = false;
    BudgetResult budget;
    const auto budget_of_point = [&]() -> const BudgetResult& {
        if (!have_budget) {
            budget = evaluate(point.link, uniform_storm(point.medium, point.link.distance_km));
            have_budget = true;
        }
        return budget;
    };

    for (const SweepOutput output : spec.outputs) {
        switch (output) {
        case SweepOutput::PathLoss:
            values.push_back(budget_of_point().loss.total_db);
            break;
        case SweepOutput::SpecificAttenuation:
            values.push_back(
                specific_attenuation(point.medium, point.link.freq_ghz, point.link.antenna_height_m));
            break;
        case SweepOutput::Margin:
            values.push_back(budget_of_point().margin_db);
            break;
        case SweepOutput::Xpd:
            if (point.differential == nullptr) {
                throw ComputeError("sweep: xpd requested without differential rates");
            }
            values.push_back(xpd_over_path(*point.differential, point.link.distance_km));
            break;
        }
    }
    return values;
}

/// Fills one preallocated row slot. Returns false with the message captured
/// instead of letting exceptions escape, so the caller can run slots on any
/// thread and still report the first failure in grid order.
bool evaluate_slot(const SweepSpec& spec, std::size_t variant_count, std::size_t index,
                   SweepRow& row, std::string& error) {
    const std::size_t grid_index = index / variant_count;
    const std::size_t variant_index = index % variant_count;
    row.axis_value = spec.grid[grid_index];
    row.variant = static_cast<std::int32_t>(variant_index);
    try {
        row.values = evaluate_outputs(spec, resolve_point(spec, row.axis_value, variant_index));
        return true;
    } catch (const std::exception& e) {
        error = e.what();
        return false;
    } catch (...) {
        error = "unknown error";
        return false;
    }
}

[[noreturn]] void throw_first_failure(const SweepSpec& spec, std::size_t variant_count,
                                      std::size_t index, const std::string& error) {
    char axis_text[32];
    std::snprintf(axis_text, sizeof(axis_text), "%.17g", spec.grid[index / variant_count]);
    std::string message = "sweep: ";
    message += axis_column(spec.axis);
    message += " = ";
    message += axis_text;
    if (!spec.variants.empty()) {
        message += ", variant \"" + spec.variants[index % variant_count].label + "\"";
    }
    message += ": " + error;
    throw ComputeError(message);
}

std::size_t row_count(const SweepSpec& spec, std::size_t variant_count) {
    return spec.grid.size() * variant_count;
}

} // namespace

std::vector<SweepRow> sweep_serial(const SweepSpec& spec) {
    validate(spec);
    const std::size_t variant_count = std::max<std::size_t>(spec.variants.size(), 1);
    std::vector<SweepRow> rows(row_count(spec, variant_count));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string error;
        if (!evaluate_slot(spec, variant_count, k, rows[k], error)) {
            throw_first_failure(spec, variant_count, k, error);
        }
    }
    return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepSpec& spec) {
    validate(spec);
    const std::size_t variant_count = std::max<std::size_t>(spec.variants.size(), 1);
    const std::size_t total = row_count(spec, variant_count);
    std::vector<SweepRow> rows(total);

#ifdef SANDLINK_HAVE_OPENMP
    std::vector<unsigned char> failed(total, 0);
    std::vector<std::string> errors(total);
    const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < count; ++k) {
        const std::size_t index = static_cast<std::size_t>(k);
        if (!evaluate_slot(spec, variant_count, index, rows[index], errors[index])) {
            failed[index] = 1;
        }
    }
    for (std::size_t k = 0; k < total; ++k) {
        if (failed[k]) {
            throw_first_failure(spec, variant_count, k, errors[k]);
        }
    }
#else
    for (std::size_t k = 0; k < total; ++k) {
        std::string error;
        if (!evaluate_slot(spec, variant_count, k, rows[k], error)) {
            throw_first_failure(spec, variant_count, k, error);
        }
    }
#endif
    return rows;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    return sweep_parallel(spec);
}

} // namespace sandlink
