// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include "sandlink/dusty_channel.hpp"
#include "sandlink/path_loss.hpp"
#include "sandlink/permittivity.hpp"

#include <string>
#include <vector>

namespace sandlink {

/// Bulk density of the reference dust cloud the bundled permittivity values
/// were measured in. Descriptive metadata only, it enters no computation.
inline constexpr double kRegionDustDensityGm3 = 2.5764; // [g/m^3]

/// One end-to-end radio hop.
struct LinkSpec {
    std::string name;
    double freq_ghz = 0.0;        // [GHz]
    double distance_km = 0.0;     // [km]
    double tx_power_dbm = 0.0;    // [dBm]
    double tx_gain_dbi = 0.0;     // [dBi]
    double rx_gain_dbi = 0.0;     // [dBi]
    double rx_threshold_dbm = 0.0; // [dBm] receiver sensitivity floor
    double antenna_height_m = 10.0; // [m] height the path runs at
};

void validate(const LinkSpec& link);

struct BudgetResult {
    PathLossBreakdown loss;
    double rx_power_dbm = 0.0; // [dBm]
    double margin_db = 0.0;    // [dB] rx power above the threshold
    bool link_up = false;      // margin >= 0
};

/// Field measurement of a dust population, given by its mean and largest
/// observed particle radius.
struct DustSample {
    std::string name;
    double radius_avg_m = 0.0; // [m]
    double radius_max_m = 0.0; // [m]
};

/// Two commercial mm-wave hops used as worked references throughout.
std::vector<LinkSpec> preset_links();

/// Sieved outdoor dust populations, coarsest first.
std::vector<DustSample> preset_dust_samples();

/// Complex permittivity of the regional dust blend at zero humidity.
ComplexPermittivity region_permittivity();

/// Laboratory dust permittivity, dry.
ComplexPermittivity dry_dust_permittivity();

/// Laboratory dust permittivity at 4% water content.
ComplexPermittivity wet_dust_permittivity();

/// Budget over a clear-air path (free-space loss only).
BudgetResult evaluate(const LinkSpec& link);

/// Budget over a path crossing the given storm profile. The profile must
/// cover the link distance exactly.
BudgetResult evaluate(const LinkSpec& link, const StormProfile& profile);

/// Ground visibility [km] at which the margin of `link` crosses zero when
/// the whole path is immersed in `medium`. The medium's own visibility_km is
/// ignored; all other fields (radius, humidity, permittivity, reference
/// height, calibration) are used as given.
double critical_visibility_km(const LinkSpec& link, const DustMedium& medium);

/// Longest clear-air path [km] the budget supports at zero margin.
double max_range_km(const LinkSpec& link);

/// Longest path [km] supported when the whole route crosses the given
/// medium at the given ground visibility. As in critical_visibility_km, the
/// template's own visibility_km is ignored in favor of the argument.
double max_range_km(const LinkSpec& link, const DustMedium& medium_template,
                    double visibility_km);

} // namespace sandlink
