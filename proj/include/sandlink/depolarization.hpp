// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

namespace sandlink {

/// Per-kilometer propagation constants for the two orthogonal polarizations
/// of a linearly polarized carrier crossing a dust-laden path.
struct DifferentialPropagation {
    double atten_h_np_km = 0.0; // [Np/km] horizontal field attenuation rate
    double atten_v_np_km = 0.0; // [Np/km] vertical field attenuation rate
    double phase_h_rad_km = 0.0; // [rad/km] horizontal phase rotation rate
    double phase_v_rad_km = 0.0; // [rad/km] vertical phase rotation rate
};

/// Attenuation rates must be finite and non-negative, phase rates finite.
void validate(const DifferentialPropagation& diff);

/// Accumulated differential state after a path of given length:
/// m = exp(-|delta_alpha| * d) and phi = delta_phase * d.
struct DepolFactors {
    double m = 1.0;   // [1] differential amplitude ratio, in (0, 1]
    double phi = 0.0; // [rad] accumulated differential phase
};

DepolFactors depol_factors(const DifferentialPropagation& diff, double distance_km);

/// Cross-polarization discrimination 10*log10((1 + 2m cos(phi) + m^2) /
/// (1 - 2m cos(phi) + m^2)). Returns +infinity when the cross-polar power
/// vanishes (m = 1, phi = 0), the ideal undisturbed channel.
double xpd(const DepolFactors& factors);

/// Convenience composition of depol_factors and xpd.
double xpd_over_path(const DifferentialPropagation& diff, double distance_km);

} // namespace sandlink
