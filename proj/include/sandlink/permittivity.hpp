// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#pragma once

#include <span>
#include <vector>

namespace sandlink {

/// Relative complex permittivity of a lossy medium.
///
/// The loss factor is stored as a non-negative magnitude: a measured value
/// quoted as "6.3485 - j0.0929" maps to eps1 = 6.3485, eps2 = 0.0929. Signing
/// conventions only matter inside the cube-root mixing rule, which treats the
/// medium as eps1 - j*eps2.
struct ComplexPermittivity {
    double eps1 = 1.0; // dielectric constant (real part)
    double eps2 = 0.0; // loss factor, >= 0

    ComplexPermittivity() = default;

    // Emits a warning-level diagnostic when the dielectric constant is below
    // 1; the empirical humidity polynomials can produce such values and they
    // are propagated, not rejected. A negative loss factor is folded to its
    // magnitude.
    ComplexPermittivity(double dielectric_constant, double loss_factor);
};

/// One constituent of a mineral mixture: relative volume plus permittivity.
struct MineralSample {
    double volume_fraction = 0.0; // in [0, 1]; a mixing set sums to 1
    ComplexPermittivity eps;
};

/// Effective-medium permittivity by the cube-root (Looyenga) volumetric
/// mixing rule. Cube roots are taken on the principal branch of
/// eps1 - j*eps2.
///
/// Throws EmptySampleSet, NegativeFraction, or FractionSumMismatch when the
/// fractions do not sum to 1 within 1e-9.
ComplexPermittivity looyenga_mix(std::span<const MineralSample> samples);

/// Shifts a dry-medium permittivity by the empirical cubic humidity
/// correction. `humidity_pct` is relative humidity in percent, 0..100.
/// The polynomial outputs are not clamped; unphysical results propagate with
/// a warning diagnostic. apply_humidity(eps, 0) is an exact identity.
ComplexPermittivity apply_humidity(const ComplexPermittivity& eps, double humidity_pct);

} // namespace sandlink
