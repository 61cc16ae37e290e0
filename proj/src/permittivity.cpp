// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include "sandlink/permittivity.hpp"

#include "sandlink/diagnostics.hpp"
#include "sandlink/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace sandlink {

namespace {

constexpr double kFractionSumTolerance = 1e-9;

} // namespace

ComplexPermittivity::ComplexPermittivity(double dielectric_constant, double loss_factor)
    : eps1(dielectric_constant)
    , eps2(std::abs(loss_factor))
{
    if (!(eps1 >= 1.0)) {
        diag::warn("permittivity: dielectric constant " + std::to_string(eps1) +
                   " is below 1, outside the physical range");
    }
}

ComplexPermittivity looyenga_mix(std::span<const MineralSample> samples)
{
    if (samples.empty()) {
        throw EmptySampleSet("looyenga_mix: sample set is empty");
    }

    double fraction_sum = 0.0;
    std::complex<double> root_sum(0.0, 0.0);
    for (const MineralSample& sample : samples) {
        if (sample.volume_fraction < 0.0) {
            throw NegativeFraction("looyenga_mix: volume fraction " +
                                   std::to_string(sample.volume_fraction) + " is negative");
        }
        fraction_sum += sample.volume_fraction;
        // lossy medium convention: eps1 - j*eps2, principal-branch cube root
        const std::complex<double> eps(sample.eps.eps1, -sample.eps.eps2);
        root_sum += sample.volume_fraction * std::pow(eps, 1.0 / 3.0);
    }
    if (std::abs(fraction_sum - 1.0) > kFractionSumTolerance) {
        throw FractionSumMismatch("looyenga_mix: volume fractions sum to " +
                                  std::to_string(fraction_sum) + ", expected 1");
    }

    const std::complex<double> mixed = root_sum * root_sum * root_sum;
    return {mixed.real(), std::abs(mixed.imag())};
}

ComplexPermittivity apply_humidity(const ComplexPermittivity& eps, double humidity_pct)
{
    if (!(humidity_pct >= 0.0 && humidity_pct <= 100.0)) {
        throw HumidityOutOfRange("apply_humidity: humidity " + std::to_string(humidity_pct) +
                                 "% is outside [0, 100]");
    }

    const double h = humidity_pct;
    // Horner form keeps humidity 0 an exact identity.
    const double shift1 = h * (0.04 + h * (-7.78e-4 + h * 5.56e-6));
    const double shift2 = h * (0.02 + h * (-3.71e-4 + h * 2.76e-6));
    return {eps.eps1 + shift1, eps.eps2 + shift2};
}

} // namespace sandlink
