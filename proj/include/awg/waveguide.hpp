#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "awg/materials.hpp"
#include "awg/roots.hpp"

namespace awg {

/// How the core/cladding indices are obtained at a temperature.
///
/// `anchored`: n_i(lambda, T) = n_i_design + [n_i_mat(lambda, T) - n_i_mat(lambda0, T0)],
/// i.e. the user-chosen indices perturbed by the material response.
/// `material`: n_i_mat(lambda, T) outright.
enum class IndexMode { anchored, material };

std::string_view to_string(IndexMode mode);
IndexMode parse_index_mode(std::string_view text);

struct WaveguideDesign {
    double core_width_um = 5.0;
    double n1 = 2.33;
    double n2 = 1.52;
    double alpha_sub = 2.63e-6;  // 1/C
    double lambda0_um = 1.550918;
    double T0 = 27.0;
    IndexMode index_mode = IndexMode::anchored;

    /// Throws DomainError unless n1 > n2 > 1, a > 0 and alpha_sub > 0.
    void validate() const;

    bool operator==(const WaveguideDesign&) const = default;
};

/// Core and cladding indices and their thermo-optic rates at one point.
struct ResolvedIndices {
    double n1 = 0;
    double n2 = 0;
    double dn1_dT = 0;
    double dn2_dT = 0;
};

/// Resolves the indices at (lambda, T) per the design's index mode. Throws
/// DomainError if the result is not guiding (n1 <= n2).
ResolvedIndices resolve_indices(const WaveguideDesign& design, const Materials& materials,
                                double temperature_c, double lambda_um);
ResolvedIndices resolve_indices(const WaveguideDesign& design, const Materials& materials,
                                double temperature_c);

// ---------------------------------------------------------------------------
// Step-index mode parameters

inline constexpr double kBCoefficient = 1.1428;
inline constexpr double kBCutoffTerm = 0.9660;
/// V below which the b(V) approximation reaches its own zero.
inline constexpr double kBCutoffV = kBCutoffTerm / kBCoefficient;

/// Normalized propagation constant b(V) = (1.1428 - 0.9660/V)^2, clamped to 0
/// below kBCutoffV. Throws DomainError for V <= 0.
double normalized_b(double V);
inline bool below_b_cutoff(double V) { return V < kBCutoffV; }

/// V = (2 pi a / lambda) sqrt(n1^2 - n2^2).
double normalized_frequency(double core_width_um, double lambda_um, double n1, double n2);

// ---------------------------------------------------------------------------
// Effective-index chain and thermal drift, formula layer

/// Closed-form constant of the effective-index chain n_c = 3.35 a^2 (n1^4 - n2^4) / lambda^2.
inline constexpr double kEffectiveIndexConstant = 3.35;

double effective_index(const ResolvedIndices& idx, double core_width_um, double lambda_um);

/// Chain-rule temperature derivative of effective_index.
double effective_index_rate(const ResolvedIndices& idx, double core_width_um, double lambda_um);

/// lambda0 / nc0 * [nc exp(alpha dT) - nc0], in nm.
double drift_shift_nm(double lambda0_um, double nc, double nc0, double alpha_sub, double delta_t);

// ---------------------------------------------------------------------------
// Design-level operations. The effective index is evaluated with lambda_c held
// at lambda0, which keeps the drift relation non-circular.

double effective_index(const WaveguideDesign& design, const Materials& materials,
                       double temperature_c);
double dnc_dT(const WaveguideDesign& design, const Materials& materials, double temperature_c);

/// lambda_c(T) = lambda0 (n_c / n_c0) exp(alpha_sub (T - T0)), in um.
double center_wavelength(const WaveguideDesign& design, const Materials& materials,
                         double temperature_c);

/// lambda_c(T) - lambda0, in nm. Exactly zero at T0.
double wavelength_shift(const WaveguideDesign& design, const Materials& materials,
                        double temperature_c);

/// dn_c/dT + alpha_sub n_c; zero when the design is athermal at T.
double athermal_residual(const WaveguideDesign& design, const Materials& materials,
                         double temperature_c);

/// Core width that zeroes athermal_residual at T by bisection over
/// [a_lo, a_hi] (um). Other design fields are taken from `design`.
RootResult solve_athermal_core_width(const WaveguideDesign& design, const Materials& materials,
                                     double temperature_c, double a_lo_um, double a_hi_um,
                                     const BisectionOptions& opts = {});

struct ThermalResponse {
    std::vector<double> temperatures;
    std::vector<double> n_c;
    std::vector<double> dnc_dT;
    std::vector<double> lambda_c_um;
    std::vector<double> delta_lambda_nm;

    std::size_t size() const { return temperatures.size(); }
};

/// Tabulates the drift quantities over a sorted, non-empty temperature grid.
ThermalResponse thermal_scan(const WaveguideDesign& design, const Materials& materials,
                             std::span<const double> temperatures_c);

/// Comparison of a scan against the reference drift figures for the hybrid
/// design: a total shift band of 0.012-0.015 nm over the scan and a rate of
/// 0.027 nm/C.
struct DriftReport {
    static constexpr double reference_band_lo_nm = 0.012;
    static constexpr double reference_band_hi_nm = 0.015;
    static constexpr double reference_rate_nm_per_c = 0.027;

    double max_abs_shift_nm = 0;
    double at_temperature_c = 0;
    /// Largest |d(lambda_c)/dT| between adjacent grid points.
    double max_abs_rate_nm_per_c = 0;
    bool within_reference_band = false;
};

DriftReport drift_report(const ThermalResponse& response);

}  // namespace awg
