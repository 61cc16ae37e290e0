// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/path_loss.hpp"

#include "sandlink/errors.hpp"

#include <cmath>
#include <numbers>

namespace sandlink {

double fspl_from_wavelength(double distance_m, double wavelength_m) {
    if (!(distance_m > 0.0)) {
        throw NonPositiveInput("fspl_from_wavelength: distance must be > 0 m");
    }
    if (!(wavelength_m > 0.0)) {
        throw NonPositiveInput("fspl_from_wavelength: wavelength must be > 0 m");
    }
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m / wavelength_m);
}

PathLossBreakdown total_path_loss(double freq_ghz, double distance_km, double dust_atten_db) {
    if (!(freq_ghz > 0.0)) {
        throw NonPositiveInput("total_path_loss: frequency must be > 0 GHz");
    }
    if (!(distance_km > 0.0)) {
        throw NonPositiveInput("total_path_loss: distance must be > 0 km");
    }
    if (dust_atten_db < 0.0) {
        throw NegativeAttenuation("total_path_loss: dust attenuation must be >= 0 dB");
    }
    PathLossBreakdown out;
    out.fspl_db = 92.44 + 20.0 * std::log10(freq_ghz) + 20.0 * std::log10(distance_km); // [dB]
    out.dust_attenuation_db = dust_atten_db;                                            // [dB]
    out.total_db = out.fspl_db + out.dust_attenuation_db;                               // [dB]
    return out;
}

} // namespace sandlink
