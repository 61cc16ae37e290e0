// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sandlink developers

#include <doctest.h>

#include <cmath>

#include <sandlink/dusty_channel.hpp>
#include <sandlink/errors.hpp>
#include <sandlink/link_budget.hpp>

#include "oracle.hpp"

using sandlink::ComplexPermittivity;
using sandlink::DustMedium;
using sandlink::MieCoefficients;
using sandlink::StormProfile;
using sandlink::StormSegment;

namespace {

DustMedium region_medium() {
    DustMedium medium;
    medium.particle_radius_m = 94.43e-6;
    medium.visibility_km = 0.010;
    medium.ref_height_m = 10.0;
    medium.humidity_pct = 0.0;
    medium.base_eps = sandlink::region_permittivity();
    medium.calibration_scale = 1.0;
    return medium;
}

} // namespace

TEST_CASE("dust medium validation rejects each out-of-range field") {
    DustMedium bad = region_medium();
    bad.particle_radius_m = 0.0;
    CHECK_THROWS_AS(sandlink::validate(bad), sandlink::NonPositiveInput);

    bad = region_medium();
    bad.visibility_km = -0.5;
    CHECK_THROWS_AS(sandlink::validate(bad), sandlink::NonPositiveInput);

    bad = region_medium();
    bad.ref_height_m = 0.0;
    CHECK_THROWS_AS(sandlink::validate(bad), sandlink::NonPositiveInput);

    bad = region_medium();
    bad.humidity_pct = 130.0;
    CHECK_THROWS_AS(sandlink::validate(bad), sandlink::HumidityOutOfRange);

    bad = region_medium();
    bad.calibration_scale = 0.0;
    CHECK_THROWS_AS(sandlink::validate(bad), sandlink::NonPositiveInput);

    CHECK_NOTHROW(sandlink::validate(region_medium()));
}

TEST_CASE("visibility height scaling is the identity at the reference height") {
    CHECK(sandlink::visibility_at_height(0.37, 10.0, 10.0) == 0.37);
    CHECK(sandlink::visibility_at_height(0.37, 10.0, 25.0, sandlink::kVisibilityGamma, 0.0) ==
          0.37);
}

TEST_CASE("visibility height scaling matches the power-law reference") {
    const double scaled = sandlink::visibility_at_height(10.0, 1.0, 10.0);
    CHECK(oracle::rel_close(scaled, 18.267631528708281L, 1e-12));
    CHECK(oracle::rel_close(scaled, oracle::visibility_at_height(10.0L, 1.0L, 10.0L), 1e-12));

    // Visibility grows with height in a storm that thins upward.
    CHECK(sandlink::visibility_at_height(0.010, 10.0, 30.0) >
          sandlink::visibility_at_height(0.010, 10.0, 10.0));
}

TEST_CASE("visibility height scaling rejects non-positive arguments") {
    CHECK_THROWS_AS(sandlink::visibility_at_height(0.0, 10.0, 10.0), sandlink::NonPositiveInput);
    CHECK_THROWS_AS(sandlink::visibility_at_height(0.01, -1.0, 10.0), sandlink::NonPositiveInput);
    CHECK_THROWS_AS(sandlink::visibility_at_height(0.01, 10.0, 0.0), sandlink::NonPositiveInput);
    CHECK_THROWS_AS(sandlink::visibility_at_height(0.01, 10.0, 10.0, 0.0), sandlink::ZeroGamma);
}

TEST_CASE("scattering coefficients of a lossless unity dielectric") {
    const MieCoefficients coef = sandlink::mie_coefficients(ComplexPermittivity(1.0, 0.0));
    CHECK(coef.c1 == 0.0);
    CHECK(coef.c2 == 0.0);
    // The closed form keeps a constant -9 in the cubic term, so the value
    // lands at -4/27 instead of 0 for vacuum-like grains.
    CHECK(oracle::rel_close(coef.c3, -4.0L / 27.0L, 1e-14));
}

TEST_CASE("scattering coefficients match reference values for the bundled permittivities") {
    const MieCoefficients region =
        sandlink::mie_coefficients(sandlink::region_permittivity());
    CHECK(oracle::rel_close(region.c1, 0.0079964327176264821L, 1e-12));
    CHECK(oracle::rel_close(region.c2, 0.017168240303792185L, 1e-12));
    CHECK(oracle::rel_close(region.c3, 0.087570561916526731L, 1e-12));

    const MieCoefficients dry = sandlink::mie_coefficients(sandlink::dry_dust_permittivity());
    CHECK(oracle::rel_close(dry.c1, 0.029804835643526523L, 1e-12));
    CHECK(oracle::rel_close(dry.c2, 0.054534156767208977L, 1e-12));
    CHECK(oracle::rel_close(dry.c3, 0.088353926038529416L, 1e-12));

    const MieCoefficients wet = sandlink::mie_coefficients(sandlink::wet_dust_permittivity());
    CHECK(oracle::rel_close(wet.c1, 0.05025140395369818L, 1e-12));
    CHECK(oracle::rel_close(wet.c2, 0.10613321594262808L, 1e-12));
    CHECK(oracle::rel_close(wet.c3, 0.087022047802745242L, 1e-12));

    const MieCoefficients lib = sandlink::mie_coefficients(ComplexPermittivity(7.4, 0.33));
    const oracle::Mie ref = oracle::mie(7.4L, 0.33L);
    CHECK(oracle::rel_close(lib.c1, ref.c1, 1e-12));
    CHECK(oracle::rel_close(lib.c2, ref.c2, 1e-12));
    CHECK(oracle::rel_close(lib.c3, ref.c3, 1e-12));
}

TEST_CASE("specific attenuation matches the composed reference") {
    const DustMedium medium = region_medium();
    const double atten = sandlink::specific_attenuation(medium, 21.8, 10.0);
    CHECK(oracle::rel_close(atten, 0.0016461399828015386L, 1e-12));
    CHECK(oracle::rel_close(atten,
                            oracle::specific_attenuation(94.43e-6L, 0.010L, 10.0L, 10.0L, 0.0L,
                                                         6.3485L, 0.0929L, 1.0L, 21.8L),
                            1e-12));
}

TEST_CASE("specific attenuation scales exactly with the calibration factor") {
    DustMedium medium = region_medium();
    const double base = sandlink::specific_attenuation(medium, 73.5, 10.0);
    medium.calibration_scale = 2.0;
    CHECK(sandlink::specific_attenuation(medium, 73.5, 10.0) == 2.0 * base);
}

TEST_CASE("halving the visibility exactly doubles the specific attenuation") {
    DustMedium medium = region_medium();
    const double base = sandlink::specific_attenuation(medium, 21.8, 10.0);
    medium.visibility_km = 0.005;
    CHECK(sandlink::specific_attenuation(medium, 21.8, 10.0) == 2.0 * base);
}

TEST_CASE("specific attenuation keeps the literal bracket for a unity dielectric") {
    DustMedium medium = region_medium();
    medium.base_eps = ComplexPermittivity(1.0, 0.0);
    const double freq = 21.8;
    const double atten = sandlink::specific_attenuation(medium, freq, 10.0);

    const MieCoefficients coef = sandlink::mie_coefficients(medium.base_eps);
    const double x = medium.particle_radius_m * freq;
    const double expected =
        medium.calibration_scale * (x / medium.visibility_km) * (((coef.c3 * x) * x) * x);
    CHECK(atten == expected);
    // The negative cubic coefficient drags the whole value below zero here.
    CHECK(atten < 0.0);
}

TEST_CASE("specific attenuation rejects bad frequency and height") {
    const DustMedium medium = region_medium();
    CHECK_THROWS_AS(sandlink::specific_attenuation(medium, 0.0, 10.0),
                    sandlink::NonPositiveInput);
    CHECK_THROWS_AS(sandlink::specific_attenuation(medium, 21.8, -5.0),
                    sandlink::NonPositiveInput);
}

TEST_CASE("specific attenuation falls as visibility improves") {
    DustMedium medium = region_medium();
    double previous = sandlink::specific_attenuation(medium, 21.8, 10.0);
    for (const double vis_km : {0.020, 0.050, 0.200, 1.0}) {
        medium.visibility_km = vis_km;
        const double current = sandlink::specific_attenuation(medium, 21.8, 10.0);
        CHECK(current < previous);
        previous = current;
    }
}

TEST_CASE("specific attenuation grows with particle radius and frequency") {
    DustMedium medium = region_medium();
    const double base = sandlink::specific_attenuation(medium, 21.8, 10.0);

    DustMedium coarse = medium;
    coarse.particle_radius_m = 2.0 * medium.particle_radius_m;
    CHECK(sandlink::specific_attenuation(coarse, 21.8, 10.0) > base);

    CHECK(sandlink::specific_attenuation(medium, 73.5, 10.0) > base);
}

TEST_CASE("humidity raises the specific attenuation of the regional dust") {
    DustMedium medium = region_medium();
    const double dry = sandlink::specific_attenuation(medium, 21.8, 10.0);
    medium.humidity_pct = 60.0;
    const double humid = sandlink::specific_attenuation(medium, 21.8, 10.0);
    medium.humidity_pct = 100.0;
    const double saturated = sandlink::specific_attenuation(medium, 21.8, 10.0);
    CHECK(humid > dry);
    CHECK(saturated > humid);
}

TEST_CASE("path attenuation of a single segment is rate times length") {
    const DustMedium medium = region_medium();
    const StormProfile profile = sandlink::uniform_storm(medium, 1.8);
    const double rate = sandlink::specific_attenuation(medium, 21.8, 10.0);
    CHECK(sandlink::path_attenuation(profile, 21.8, 10.0) == rate * 1.8);
}

TEST_CASE("path attenuation is additive over segments") {
    const DustMedium medium = region_medium();
    StormProfile split;
    split.segments = {StormSegment{1.0, medium}, StormSegment{1.0, medium}};
    const StormProfile whole = sandlink::uniform_storm(medium, 2.0);
    const double a = sandlink::path_attenuation(split, 21.8, 10.0);
    const double b = sandlink::path_attenuation(whole, 21.8, 10.0);
    CHECK(oracle::rel_close(a, static_cast<long double>(b), 1e-12));
}

TEST_CASE("zero-length segments contribute nothing") {
    const DustMedium medium = region_medium();
    DustMedium thick = medium;
    thick.visibility_km = 0.001;

    StormProfile with_marker;
    with_marker.segments = {StormSegment{1.8, medium}, StormSegment{0.0, thick}};
    const StormProfile without = sandlink::uniform_storm(medium, 1.8);
    CHECK(sandlink::path_attenuation(with_marker, 21.8, 10.0) ==
          sandlink::path_attenuation(without, 21.8, 10.0));
}

TEST_CASE("path attenuation rejects degenerate profiles") {
    CHECK_THROWS_AS(sandlink::path_attenuation(StormProfile{}, 21.8, 10.0),
                    sandlink::EmptyProfile);

    StormProfile zero_total;
    zero_total.segments = {StormSegment{0.0, region_medium()}};
    CHECK_THROWS_AS(sandlink::path_attenuation(zero_total, 21.8, 10.0),
                    sandlink::NonPositiveInput);

    StormProfile negative;
    negative.segments = {StormSegment{2.0, region_medium()},
                         StormSegment{-0.5, region_medium()}};
    CHECK_THROWS_AS(sandlink::path_attenuation(negative, 21.8, 10.0),
                    sandlink::NonPositiveInput);
}

TEST_CASE("uniform storm covers the requested length with one segment") {
    const StormProfile profile = sandlink::uniform_storm(region_medium(), 5.0);
    REQUIRE(profile.segments.size() == 1);
    CHECK(profile.segments[0].length_km == 5.0);
    CHECK(profile.total_length_km() == 5.0);
    CHECK_THROWS_AS(sandlink::uniform_storm(region_medium(), 0.0), sandlink::NonPositiveInput);
}
