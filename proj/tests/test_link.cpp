#include <doctest.h>

#include <cmath>

#include "awg/errors.hpp"
#include "awg/link.hpp"
#include "test_support.hpp"

using namespace awg;
using awg::test::rel_err;

TEST_SUITE("link") {

TEST_CASE("relative index difference") {
    CHECK(rel_err(relative_index_difference(2.33, 1.52), 0.28721287922046823) < 1e-14);
    CHECK(std::abs(relative_index_difference(2.33, 1.52) - 0.2872) < 2e-5);
    CHECK(rel_err(relative_index_difference(2.33, 1e-9), 0.5) < 1e-15);
    CHECK_THROWS_AS(relative_index_difference(1.5, 1.5), DomainError);
    CHECK_THROWS_AS(relative_index_difference(1.5, 1.6), DomainError);
    CHECK_THROWS_AS(relative_index_difference(1.5, 0.0), DomainError);
}

TEST_CASE("waveguide dispersion factor") {
    CHECK(rel_err(waveguide_dispersion_factor(2.405), 0.32266665514066761) < 1e-14);
    CHECK(rel_err(waveguide_dispersion_factor(0.966), 2.0) < 1e-15);
    CHECK_THROWS_AS(waveguide_dispersion_factor(0.0), DomainError);

    CHECK(YFactor::parse("auto") == YFactor::automatic_factor());
    CHECK(YFactor::parse("constant:0.5") == YFactor::constant_factor(0.5));
    CHECK(YFactor::parse(YFactor::constant_factor(0.25).to_string()) == YFactor::constant_factor(0.25));
    CHECK(YFactor::parse(YFactor{}.to_string()) == YFactor{});
    CHECK_THROWS_AS(YFactor::parse("constant:"), ConfigError);
    CHECK_THROWS_AS(YFactor::parse("constant:abc"), ConfigError);
    CHECK_THROWS_AS(YFactor::parse("fixed"), ConfigError);
}

TEST_CASE("material dispersion") {
    const Materials mats;
    CHECK(material_dispersion_from_curvature(1.55, 0.0) == 0.0);
    CHECK(rel_err(material_dispersion(mats, 1.0, 27), -499.02423672861955) < 1e-9);
    CHECK(rel_err(material_dispersion(mats, 1.55, 27), -78.671145023013328) < 1e-9);
    CHECK(rel_err(material_dispersion(mats, 1.55, 27, DerivativeMode::paper), -80.666630649686003) < 1e-9);
    // -(lambda/c) d2n: 1 um * 1 um^-2 / c = 1e6 / 3e8 s/m^2 = 1/300 ps/(nm km) * 1e6.
    CHECK(rel_err(material_dispersion_from_curvature(1.0, -1.0), 1e6 / 3e8 * 1e6) < 1e-14);
}

TEST_CASE("waveguide and total dispersion") {
    const Materials mats;
    const WaveguideDesign d;
    CHECK(rel_err(waveguide_dispersion(d, mats, 1.3, 27), -0.48788648395544534) < 1e-9);
    CHECK(rel_err(total_dispersion(d, mats, 1.55, 27), -79.258130981906305) < 1e-9);

    struct Spot {
        double l, T, dm, dw, dt;
    };
    const Spot spots[] = {
        {1.0, 20, -498.96559385022568, -0.36898376647457762, -499.33457761670026},
        {1.2, 35, -255.51289243132311, -0.44896031202921973, -255.96185274335233},
        {1.31, 50, -179.73982819608055, -0.49370029760546555, -180.23352849368602},
        {1.55, 27, -78.671145023013314, -0.58698595889297776, -79.258130981906292},
        {1.64, 70, -54.008966586759483, -0.62635365298676253, -54.635320239746245},
    };
    for (const auto& s : spots) {
        CAPTURE(s.l);
        CHECK(rel_err(material_dispersion(mats, s.l, s.T), s.dm) < 1e-6);
        CHECK(rel_err(waveguide_dispersion(d, mats, s.l, s.T), s.dw) < 1e-6);
        CHECK(rel_err(total_dispersion(d, mats, s.l, s.T), s.dt) < 1e-6);
    }

    SUBCASE("a constant Y replaces Y(V)") {
        const double dw = waveguide_dispersion(d, mats, 1.3, 27, YFactor::constant_factor(0.0));
        CHECK(dw == 0.0);
        const double direct = waveguide_dispersion_from(1.3, 2.4, 1.5, 0.5);
        CHECK(direct < 0.0);
        CHECK(rel_err(waveguide_dispersion_from(1.3, 2.4, 1.5, 1.0), 2 * direct) < 1e-15);
    }
    SUBCASE("total is the sum of its parts") {
        for (double l = 1.0; l <= 1.65; l += 0.05) {
            const double sum = material_dispersion(mats, l, 45) + waveguide_dispersion(d, mats, l, 45);
            CHECK(total_dispersion(d, mats, l, 45) == doctest::Approx(sum).epsilon(1e-14));
        }
    }
}

TEST_CASE("spectral slice") {
    CHECK(spectral_slice_width(1) == doctest::Approx(0.65).epsilon(1e-15));
    CHECK(rel_err(spectral_slice_width(24), 0.65 / 24) < 1e-15);
    CHECK(std::abs(spectral_slice_width(24) - 0.027083) < 1e-6);
    CHECK(rel_err(spectral_slice_width(13, 1.0, 1.65), 0.05) < 1e-14);
    CHECK_THROWS_AS(spectral_slice_width(0), DomainError);
    CHECK_THROWS_AS(spectral_slice_width(4, 1.6, 1.0), DomainError);
}

TEST_CASE("pulse broadening and bit rates") {
    CHECK(rel_err(pulse_broadening(17.0, 10.0, 1.0), 0.17) < 1e-15);
    CHECK(pulse_broadening(-17.0, 10.0, 1.0) == pulse_broadening(17.0, 10.0, 1.0));
    CHECK_THROWS_AS(pulse_broadening(17.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(pulse_broadening(17.0, 10.0, -1.0), DomainError);

    CHECK(mtdm_bitrate_per_channel(0.25) == 1.0);
    CHECK(rel_err(mtdm_bitrate_per_channel(0.025), 10.0) < 1e-15);
    CHECK(mtdm_bitrate_per_link(0.25, 16) == 16.0);
    CHECK_THROWS_AS(mtdm_bitrate_per_channel(0.0), DomainError);
    CHECK_THROWS_AS(mtdm_bitrate_per_link(0.25, 0), DomainError);
}

TEST_CASE("composed link pipeline") {
    const Materials mats;
    const WaveguideDesign d;
    const LinkBudget b;
    const auto x = evaluate_link(d, mats, b, 1.55, {});
    CHECK(rel_err(x.Dt, -79.258130981906305) < 1e-9);
    CHECK(rel_err(x.delta_tau_ns, 21.465743807599624) < 1e-9);
    CHECK(rel_err(x.Brm_Gbps, 0.011646463418215736) < 1e-9);
    CHECK(rel_err(x.BrLink_Gbps, 0.18634341469145178) < 1e-9);
    CHECK(x.Dt == x.Dm + x.Dw);
    const auto idx = resolve_indices(d, mats, b.temperature_c, 1.55);
    CHECK(x.V == normalized_frequency(d.core_width_um, 1.55, idx.n1, idx.n2));
}

TEST_CASE("link invariants") {
    const Materials mats;
    awg::test::Gen gen(4242);
    for (int i = 0; i < 300; ++i) {
        WaveguideDesign d;
        d.n1 = gen.uniform(2.2, 2.5);
        d.n2 = gen.uniform(1.45, 1.6);
        d.core_width_um = gen.uniform(2.0, 8.0);
        LinkBudget b;
        b.num_links = gen.integer(1, 24);
        b.num_channels = gen.integer(1, 64);
        b.fiber_length_km = gen.uniform(1.0, 40.0);
        b.temperature_c = gen.uniform(20.0, 70.0);
        const double l = gen.uniform(1.0, 1.65);
        const auto x = evaluate_link(d, mats, b, l, {});
        CHECK(x.delta_tau_ns > 0.0);
        CHECK(std::abs(x.Brm_Gbps * x.delta_tau_ns - 0.25) <= 0.25 * 2 * 2.2e-16);
        CHECK(rel_err(x.BrLink_Gbps, b.num_channels * x.Brm_Gbps) < 1e-14);
        CHECK(x.Dw < 0.0);

        // Doubling the number of links halves the slice, so the rate doubles.
        if (b.num_links <= 12) {
            LinkBudget b2 = b;
            b2.num_links *= 2;
            CHECK(rel_err(evaluate_link(d, mats, b2, l, {}).Brm_Gbps, 2 * x.Brm_Gbps) < 1e-12);
        }
    }
}

TEST_CASE("budget validation and linewidth") {
    LinkBudget b;
    CHECK_NOTHROW(b.validate());
    CHECK(rel_err(b.effective_linewidth_nm(), 650.0 / 24) < 1e-14);
    b.source_linewidth_nm = 0.8;
    CHECK(b.effective_linewidth_nm() == 0.8);

    const Materials mats;
    const WaveguideDesign d;
    const auto x = evaluate_link(d, mats, b, 1.55, {});
    CHECK(rel_err(x.delta_tau_ns, std::abs(x.Dt) * 10.0 * 0.8 * 1e-3) < 1e-14);

    auto bad = [](auto edit) {
        LinkBudget v;
        edit(v);
        return v;
    };
    CHECK_THROWS_AS(bad([](auto& v) { v.num_links = 0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](auto& v) { v.num_links = 25; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](auto& v) { v.num_channels = 0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](auto& v) { v.fiber_length_km = 0; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](auto& v) { v.lambda_f_um = 0.9; }).validate(), DomainError);
    CHECK_THROWS_AS(bad([](auto& v) { v.source_linewidth_nm = 0.0; }).validate(), DomainError);
}

}  // TEST_SUITE
