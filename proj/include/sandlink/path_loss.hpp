// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

namespace sandlink {

inline constexpr double kSpeedOfLightMps = 299'792'458.0;

/// Total channel loss split into its free-space and dust contributions.
/// total_db is always the exact sum of the two parts.
struct PathLossBreakdown {
    double fspl_db = 0.0;
    double dust_attenuation_db = 0.0;
    double total_db = 0.0;
};

/// Line-of-sight free-space loss 20*log10(4*pi*d/lambda), both in meters.
double fspl_from_wavelength(double distance_m, double wavelength_m);

/// Free-space loss in engineering units, 92.44 + 20*log10(f) + 20*log10(d)
/// with f in GHz and d in km, plus the dust attenuation in dB. Negative dust
/// attenuation signals upstream misuse and is rejected.
PathLossBreakdown total_path_loss(double freq_ghz, double distance_km, double dust_atten_db);

} // namespace sandlink
