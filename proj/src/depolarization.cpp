// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/depolarization.hpp"

#include "sandlink/errors.hpp"

#include <cmath>
#include <limits>

namespace sandlink {

void validate(const DifferentialPropagation& diff) {
    if (!std::isfinite(diff.atten_h_np_km) || !std::isfinite(diff.atten_v_np_km)) {
        throw ValidationError("differential propagation: attenuation rates must be finite");
    }
    if (diff.atten_h_np_km < 0.0 || diff.atten_v_np_km < 0.0) {
        throw ValidationError("differential propagation: attenuation rates must be >= 0 Np/km");
    }
    if (!std::isfinite(diff.phase_h_rad_km) || !std::isfinite(diff.phase_v_rad_km)) {
        throw ValidationError("differential propagation: phase rates must be finite");
    }
}

DepolFactors depol_factors(const DifferentialPropagation& diff, double distance_km) {
    validate(diff);
    if (!(distance_km > 0.0)) {
        throw NonPositiveDistance("depol_factors: distance must be > 0 km");
    }
    DepolFactors out;
    out.m = std::exp(-std::abs(diff.atten_h_np_km - diff.atten_v_np_km) * distance_km);
    out.phi = (diff.phase_h_rad_km - diff.phase_v_rad_km) * distance_km;
    return out;
}

double xpd(const DepolFactors& factors) {
    const double m = factors.m;
    if (!std::isfinite(m) || m < 0.0 || m > 1.0) {
        throw ValidationError("xpd: amplitude ratio must lie in [0, 1]");
    }
    if (!std::isfinite(factors.phi)) {
        throw ValidationError("xpd: differential phase must be finite");
    }
    const double cross = 2.0 * m * std::cos(factors.phi);
    const double num = 1.0 + cross + m * m;
    const double den = 1.0 - cross + m * m;
    if (den <= 0.0) {
        // Co-polar and cross-polar fields align exactly; the discrimination
        // ratio diverges rather than being an error.
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(num / den);
}

double xpd_over_path(const DifferentialPropagation& diff, double distance_km) {
    return xpd(depol_factors(diff, distance_km));
}

} // namespace sandlink
