// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include "sandlink/scenario.hpp"

#include <cstdint>
#include <vector>

namespace sandlink {

/// One evaluated sweep point: the axis value, the index of the variant it
/// belongs to (0 when the spec declares no variants), and one value per
/// requested output, in spec order.
struct SweepRow {
    double axis_value = 0.0;
    std::int32_t variant = 0;
    std::vector<double> values;
};

/// Evaluates every (grid point, variant) combination. Rows come back in
/// grid-major order: all variants of grid[0], then all variants of grid[1],
/// and so on. A failing point raises ComputeError naming the first offending
/// combination in that order.
///
/// Both implementations produce bitwise-identical rows; the parallel one
/// spreads points across threads when the library is built with OpenMP and
/// falls back to the serial loop otherwise.
std::vector<SweepRow> sweep_serial(const SweepSpec& spec);
std::vector<SweepRow> sweep_parallel(const SweepSpec& spec);

/// The default entry point: sweep_parallel.
std::vector<SweepRow> sweep(const SweepSpec& spec);

} // namespace sandlink
