// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include "sandlink/permittivity.hpp"

#include <vector>

namespace sandlink {

// Height-scaling constants for visibility. The scaling exponent b/gamma comes
// from the power-law profile V^gamma = v0^gamma * (h/h0)^b.
inline constexpr double kVisibilityGamma = 1.07;
inline constexpr double kVisibilityHeightExponent = 0.28; // b

/// Storm description at a reference height: particle size, visibility,
/// humidity and the dry permittivity of the suspended mineral.
struct DustMedium {
    double particle_radius_m = 0.0; // effective particle radius a_e [m]
    double visibility_km = 0.0;     // visibility at ref_height_m [km]
    double ref_height_m = 0.0;      // height of the visibility observation [m]
    double humidity_pct = 0.0;      // relative humidity [%]
    ComplexPermittivity base_eps;   // pre-humidity permittivity
    double calibration_scale = 1.0; // empirical multiplier on the attenuation
};

/// Throws when a field violates its invariant (positivity, humidity range).
void validate(const DustMedium& medium);

/// Scattering-model coefficients of the specific-attenuation bracket.
/// c1 and c2 are non-negative for any physical permittivity; c3 follows the
/// printed closed form literally and can be negative near eps1 = 1.
struct MieCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// Piecewise-constant storm description along the propagation path.
struct StormSegment {
    double length_km = 0.0;
    DustMedium medium;
};

struct StormProfile {
    std::vector<StormSegment> segments;

    double total_length_km() const;
};

/// Single-segment profile covering `length_km` of a homogeneous storm.
StormProfile uniform_storm(const DustMedium& medium, double length_km);

/// Visibility at height h given the value v0 observed at reference height h0.
/// Returns v0 * (h/h0)^(b/gamma), in the unit of v0. Heights are in meters.
double visibility_at_height(double v0, double h0_m, double h_m,
                            double gamma = kVisibilityGamma,
                            double b = kVisibilityHeightExponent);

MieCoefficients mie_coefficients(const ComplexPermittivity& eps);

/// Specific attenuation of the dusty medium in dB/km at the given operating
/// frequency [GHz] and propagation height [m]. Applies the humidity
/// correction to the medium's permittivity and scales its visibility from
/// ref_height_m to height_m before evaluating the scattering bracket.
double specific_attenuation(const DustMedium& medium, double freq_ghz, double height_m);

/// Path-integrated dust attenuation in dB: sum of segment length times the
/// segment medium's specific attenuation.
double path_attenuation(const StormProfile& profile, double freq_ghz, double height_m);

} // namespace sandlink
