// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/link_budget.hpp"

#include "sandlink/errors.hpp"

#include <cmath>

namespace sandlink {

namespace {

constexpr double kProfileLengthTolKm = 1e-9;   // [km]
constexpr double kRootResidualTolDb = 1e-9;    // [dB]
constexpr double kRangeSearchFloorKm = 1e-9;   // [km]
constexpr double kRangeSearchCeilKm = 1e9;     // [km]
constexpr double kRangeResolutionKm = 1e-9;    // [km]
constexpr double kRangeResidualTolDb = 1e-6;   // [dB]

bool finite_positive(double v) {
    return std::isfinite(v) && v > 0.0;
}

BudgetResult finish(const LinkSpec& link, const PathLossBreakdown& loss) {
    BudgetResult out;
    out.loss = loss;
    out.rx_power_dbm = link.tx_power_dbm + link.tx_gain_dbi + link.rx_gain_dbi - loss.total_db;
    out.margin_db = out.rx_power_dbm - link.rx_threshold_dbm;
    out.link_up = out.margin_db >= 0.0;
    return out;
}

double margin_at(const LinkSpec& link, double distance_km, double atten_db_per_km) {
    const PathLossBreakdown loss =
        total_path_loss(link.freq_ghz, distance_km, atten_db_per_km * distance_km);
    const double rx = link.tx_power_dbm + link.tx_gain_dbi + link.rx_gain_dbi - loss.total_db;
    return rx - link.rx_threshold_dbm;
}

// Largest distance with non-negative margin, for a distance-independent
// per-km attenuation rate. The margin is strictly decreasing in distance, so
// bracket doubling plus bisection always converges. Keeps halving past the
// distance resolution until the surviving margin is within the residual
// tolerance, so the returned point is a true zero crossing.
double max_range_impl(const LinkSpec& link, double atten_db_per_km) {
    double lo = kRangeSearchFloorKm;
    double margin_lo = margin_at(link, lo, atten_db_per_km);
    if (margin_lo <= 0.0) {
        throw NoPositiveRange("max_range: link is down at every positive distance");
    }
    double hi = 1.0; // [km]
    while (true) {
        const double margin_hi = margin_at(link, hi, atten_db_per_km);
        if (margin_hi <= 0.0) {
            break;
        }
        lo = hi;
        margin_lo = margin_hi;
        hi *= 2.0;
        if (hi > kRangeSearchCeilKm) {
            throw ComputeError("max_range: no sign change found below 1e9 km");
        }
    }
    while (hi - lo > kRangeResolutionKm || margin_lo > kRangeResidualTolDb) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break; // interval narrowed to adjacent doubles
        }
        const double margin_mid = margin_at(link, mid, atten_db_per_km);
        if (margin_mid >= 0.0) {
            lo = mid;
            margin_lo = margin_mid;
        } else {
            hi = mid;
        }
    }
    if (margin_lo > kRangeResidualTolDb) {
        throw ComputeError("max_range: zero-margin residual out of tolerance");
    }
    return lo;
}

} // namespace

void validate(const LinkSpec& link) {
    if (!finite_positive(link.freq_ghz)) {
        throw NonPositiveInput("link: frequency must be a finite value > 0 GHz");
    }
    if (!finite_positive(link.distance_km)) {
        throw NonPositiveInput("link: distance must be a finite value > 0 km");
    }
    if (!finite_positive(link.antenna_height_m)) {
        throw NonPositiveInput("link: antenna height must be a finite value > 0 m");
    }
    if (!std::isfinite(link.tx_power_dbm) || !std::isfinite(link.tx_gain_dbi) ||
        !std::isfinite(link.rx_gain_dbi) || !std::isfinite(link.rx_threshold_dbm)) {
        throw ValidationError("link: power, gains and threshold must be finite");
    }
}

std::vector<LinkSpec> preset_links() {
    LinkSpec low;
    low.name = "ML-6363";
    low.freq_ghz = 21.8;
    low.distance_km = 1.8;
    low.tx_power_dbm = 20.0;
    low.tx_gain_dbi = 40.7;
    low.rx_gain_dbi = 40.7;
    low.rx_threshold_dbm = -79.0;
    low.antenna_height_m = 10.0;

    LinkSpec high;
    high.name = "ML-6352";
    high.freq_ghz = 73.5;
    high.distance_km = 1.8;
    high.tx_power_dbm = 15.0;
    high.tx_gain_dbi = 46.5;
    high.rx_gain_dbi = 46.5;
    high.rx_threshold_dbm = -75.0;
    high.antenna_height_m = 10.0;

    return {low, high};
}

std::vector<DustSample> preset_dust_samples() {
    return {
        {"sample-1", 94.43e-6, 538.04e-6},
        {"sample-2", 64.34e-6, 159.61e-6},
        {"sample-3", 25.23e-6, 128.68e-6},
    };
}

ComplexPermittivity region_permittivity() {
    return {6.3485, 0.0929};
}

ComplexPermittivity dry_dust_permittivity() {
    return {5.23, 0.26};
}

ComplexPermittivity wet_dust_permittivity() {
    return {6.23, 0.57};
}

BudgetResult evaluate(const LinkSpec& link) {
    validate(link);
    return finish(link, total_path_loss(link.freq_ghz, link.distance_km, 0.0));
}

BudgetResult evaluate(const LinkSpec& link, const StormProfile& profile) {
    validate(link);
    if (std::abs(profile.total_length_km() - link.distance_km) > kProfileLengthTolKm) {
        throw ProfileLengthMismatch("evaluate: storm profile must cover the link distance");
    }
    const double atten = path_attenuation(profile, link.freq_ghz, link.antenna_height_m);
    return finish(link, total_path_loss(link.freq_ghz, link.distance_km, atten));
}

double critical_visibility_km(const LinkSpec& link, const DustMedium& medium) {
    validate(link);
    const BudgetResult clear = evaluate(link);
    if (clear.margin_db <= 0.0) {
        throw LinkDownInClearAir("critical_visibility: no margin to trade against dust");
    }

    DustMedium unit = medium;
    unit.visibility_km = 1.0;
    validate(unit);

    // Path attenuation scales as 1/visibility, so one evaluation at unit
    // visibility fixes the whole curve.
    const double alpha_unit_db =
        specific_attenuation(unit, link.freq_ghz, link.antenna_height_m) * link.distance_km;
    if (!(alpha_unit_db > 0.0)) {
        throw NonPositiveBracket("critical_visibility: medium does not attenuate this carrier");
    }

    const double vis_km = alpha_unit_db / clear.margin_db;

    DustMedium at_root = unit;
    at_root.visibility_km = vis_km;
    const BudgetResult check = evaluate(link, uniform_storm(at_root, link.distance_km));
    if (std::abs(check.margin_db) > kRootResidualTolDb) {
        throw ComputeError("critical_visibility: zero-margin residual out of tolerance");
    }
    return vis_km;
}

double max_range_km(const LinkSpec& link) {
    validate(link);
    return max_range_impl(link, 0.0);
}

double max_range_km(const LinkSpec& link, const DustMedium& medium_template,
                    double visibility_km) {
    validate(link);
    DustMedium medium = medium_template;
    medium.visibility_km = visibility_km;
    validate(medium);
    const double atten_db_per_km =
        specific_attenuation(medium, link.freq_ghz, link.antenna_height_m);
    return max_range_impl(link, atten_db_per_km);
}

} // namespace sandlink
