#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace awg {

/// How d2n/dlambda2 of the LiNbO3 core is evaluated.
///
/// `exact` is the true second derivative of the Sellmeier form. `paper`
/// reproduces the published closed form, which drops the -(dn/dlambda)^2/n
/// term; it is kept only for figure-faithful reruns.
enum class DerivativeMode { exact, paper };

std::string_view to_string(DerivativeMode mode);
DerivativeMode parse_derivative_mode(std::string_view text);

/// Supported evaluation window shared by both materials. The working band is
/// 1.0-1.65 um and 20-70 C; the guard is deliberately wider.
struct EvaluationDomain {
    static constexpr double lambda_min_um = 0.5;
    static constexpr double lambda_max_um = 5.0;
    static constexpr double temperature_min_c = 0.0;
    static constexpr double temperature_max_c = 100.0;
    static constexpr double pole_epsilon = 1e-12;
};

/// Temperature-dependent Sellmeier model of congruent LiNbO3 (extraordinary
/// index). Wavelength in um, temperature in C. H = T^2 - T0^2 couples the
/// temperature into every coefficient pair.
struct LiNbO3Model {
    double A1 = 5.35583;
    double A2 = 4.629e-7;
    double A3 = 0.100473;
    double A4 = 3.862e-8;
    double A5 = 0.20692;
    double A6 = -0.89e-8;
    double A7 = 100.0;
    double A8 = 2.657e-5;
    double A9 = 11.34927;
    double A10 = 0.01533;
    double T0 = 27.0;

    double index(double lambda_um, double temperature_c) const;
    double dn_dlambda(double lambda_um, double temperature_c) const;
    double d2n_dlambda2(double lambda_um, double temperature_c,
                        DerivativeMode mode = DerivativeMode::exact) const;
    double dn_dT(double lambda_um, double temperature_c) const;

    bool operator==(const LiNbO3Model&) const = default;
};

/// Sellmeier model of PMMA with the two UV resonances scaled by T/T0.
struct PmmaModel {
    double C1 = 0.4963;
    double C2_base = 0.0718;
    double C3 = 0.6965;
    double C4_base = 0.1174;
    double C5 = 0.3223;
    double C6 = 9.237;
    double T0 = 27.0;

    double C2(double temperature_c) const { return C2_base * temperature_c / T0; }
    double C4(double temperature_c) const { return C4_base * temperature_c / T0; }

    double index(double lambda_um, double temperature_c) const;
    double dn_dT(double lambda_um, double temperature_c) const;

    bool operator==(const PmmaModel&) const = default;
};

/// Core/cladding material pair of the hybrid waveguide.
struct Materials {
    LiNbO3Model core;
    PmmaModel cladding;

    bool operator==(const Materials&) const = default;
};

struct IndexSample {
    double lambda_um = 0;
    double temperature_c = 0;
    double n = 0;
    double dn_dlambda = 0;
    double d2n_dlambda2 = 0;
    double dn_dT = 0;
};

IndexSample sample_linbo3(const LiNbO3Model& model, double lambda_um, double temperature_c,
                          DerivativeMode mode = DerivativeMode::exact);

/// PMMA carries no wavelength derivatives; those fields stay zero.
IndexSample sample_pmma(const PmmaModel& model, double lambda_um, double temperature_c);

// ---------------------------------------------------------------------------
// Finite-difference self check

enum class MaterialId { linbo3, pmma };

std::string_view to_string(MaterialId id);

/// Step sizes of the central differences used as the derivative oracle.
struct FiniteDifferenceSteps {
    double lambda_um = 1e-5;
    double temperature_c = 1e-3;
    /// Step for differencing dn/dlambda into d2n/dlambda2.
    double lambda2_um = 1e-4;
};

/// Worst-case relative deviation of one analytic derivative from its finite
/// difference over a grid, with the point where it occurred.
struct DerivativeDeviation {
    std::string name;
    double max_relative_error = 0;
    double at_lambda_um = 0;
    double at_temperature_c = 0;
    /// Threshold the deviation is judged against; zero means report-only.
    double tolerance = 0;

    bool passed() const { return tolerance <= 0 || max_relative_error < tolerance; }
};

struct SelfCheckReport {
    MaterialId material = MaterialId::linbo3;
    DerivativeMode mode = DerivativeMode::exact;
    std::size_t points = 0;
    std::vector<DerivativeDeviation> derivatives;

    bool passed() const;
};

/// Compares every analytic derivative of the chosen material against central
/// finite differences of the value function on the lambda x T grid.
///
/// First derivatives are gated at 1e-5 relative, the exact-mode second
/// derivative at 1e-4. In paper mode the second derivative is reported but
/// not gated. Throws ConfigError on an empty grid.
SelfCheckReport derivative_self_check(const Materials& materials, MaterialId id,
                                      std::span<const double> lambda_grid_um,
                                      std::span<const double> temperature_grid_c,
                                      DerivativeMode mode = DerivativeMode::exact,
                                      const FiniteDifferenceSteps& steps = {});

}  // namespace awg
