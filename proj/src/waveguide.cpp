#include "awg/waveguide.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "awg/errors.hpp"
#include "awg/units.hpp"

namespace awg {

std::string_view to_string(IndexMode mode) {
    return mode == IndexMode::anchored ? "anchored" : "material";
}

IndexMode parse_index_mode(std::string_view text) {
    if (text == "anchored" || text == "design-anchored") return IndexMode::anchored;
    if (text == "material" || text == "material-derived") return IndexMode::material;
    throw ConfigError("index mode must be 'anchored' or 'material', got '" + std::string(text) +
                      "'");
}

void WaveguideDesign::validate() const {
    if (!(core_width_um > 0)) throw DomainError("core width must be positive");
    if (!(alpha_sub > 0)) throw DomainError("substrate expansion coefficient must be positive");
    if (!(lambda0_um > 0)) throw DomainError("center wavelength must be positive");
    if (!(n2 > 1.0 && n1 > n2))
        throw DomainError("design indices must satisfy n1 > n2 > 1 (n1=" + std::to_string(n1) +
                          ", n2=" + std::to_string(n2) + ")");
}

ResolvedIndices resolve_indices(const WaveguideDesign& design, const Materials& materials,
                                double temperature_c, double lambda_um) {
    design.validate();
    ResolvedIndices idx;
    idx.n1 = materials.core.index(lambda_um, temperature_c);
    idx.n2 = materials.cladding.index(lambda_um, temperature_c);
    idx.dn1_dT = materials.core.dn_dT(lambda_um, temperature_c);
    idx.dn2_dT = materials.cladding.dn_dT(lambda_um, temperature_c);
    if (design.index_mode == IndexMode::anchored) {
        idx.n1 = design.n1 + (idx.n1 - materials.core.index(design.lambda0_um, design.T0));
        idx.n2 = design.n2 + (idx.n2 - materials.cladding.index(design.lambda0_um, design.T0));
    }
    if (!(idx.n1 > idx.n2))
        throw DomainError("core index " + std::to_string(idx.n1) +
                          " does not exceed cladding index " + std::to_string(idx.n2) +
                          " at T=" + std::to_string(temperature_c) + " C");
    return idx;
}

ResolvedIndices resolve_indices(const WaveguideDesign& design, const Materials& materials,
                                double temperature_c) {
    return resolve_indices(design, materials, temperature_c, design.lambda0_um);
}

double normalized_b(double V) {
    if (!(V > 0)) throw DomainError("normalized frequency must be positive");
    if (below_b_cutoff(V)) return 0.0;
    const double root = kBCoefficient - kBCutoffTerm / V;
    return root * root;
}

double normalized_frequency(double core_width_um, double lambda_um, double n1, double n2) {
    if (!(n1 > n2)) throw DomainError("normalized frequency needs n1 > n2");
    return 2.0 * std::numbers::pi * core_width_um / lambda_um * std::sqrt(n1 * n1 - n2 * n2);
}

double effective_index(const ResolvedIndices& idx, double core_width_um, double lambda_um) {
    const double n1_4 = std::pow(idx.n1, 4);
    const double n2_4 = std::pow(idx.n2, 4);
    return kEffectiveIndexConstant * core_width_um * core_width_um * (n1_4 - n2_4) /
           (lambda_um * lambda_um);
}

double effective_index_rate(const ResolvedIndices& idx, double core_width_um, double lambda_um) {
    const double scale = kEffectiveIndexConstant * core_width_um * core_width_um /
                         (lambda_um * lambda_um);
    return scale * (4.0 * std::pow(idx.n1, 3) * idx.dn1_dT - 4.0 * std::pow(idx.n2, 3) * idx.dn2_dT);
}

double drift_shift_nm(double lambda0_um, double nc, double nc0, double alpha_sub, double delta_t) {
    if (!(nc0 > 0)) throw DomainError("reference effective index must be positive");
    // lambda0 [r e^x - 1] with r - 1 and e^x - 1 kept separate to avoid cancellation.
    const double x = alpha_sub * delta_t;
    const double dr = (nc - nc0) / nc0;
    return units::um_to_nm(lambda0_um * (dr * std::exp(x) + std::expm1(x)));
}

double effective_index(const WaveguideDesign& design, const Materials& materials,
                       double temperature_c) {
    return effective_index(resolve_indices(design, materials, temperature_c), design.core_width_um,
                           design.lambda0_um);
}

double dnc_dT(const WaveguideDesign& design, const Materials& materials, double temperature_c) {
    return effective_index_rate(resolve_indices(design, materials, temperature_c),
                                design.core_width_um, design.lambda0_um);
}

namespace {

double reference_effective_index(const WaveguideDesign& design, const Materials& materials) {
    const double nc0 = effective_index(design, materials, design.T0);
    if (!(nc0 > 0)) throw DomainError("effective index at T0 must be positive");
    return nc0;
}

}  // namespace

double center_wavelength(const WaveguideDesign& design, const Materials& materials,
                         double temperature_c) {
    const double nc0 = reference_effective_index(design, materials);
    const double nc = effective_index(design, materials, temperature_c);
    return design.lambda0_um * (nc / nc0) *
           std::exp(design.alpha_sub * (temperature_c - design.T0));
}

double wavelength_shift(const WaveguideDesign& design, const Materials& materials,
                        double temperature_c) {
    const double nc0 = reference_effective_index(design, materials);
    const double nc = effective_index(design, materials, temperature_c);
    return drift_shift_nm(design.lambda0_um, nc, nc0, design.alpha_sub,
                          temperature_c - design.T0);
}

double athermal_residual(const WaveguideDesign& design, const Materials& materials,
                         double temperature_c) {
    const auto idx = resolve_indices(design, materials, temperature_c);
    return effective_index_rate(idx, design.core_width_um, design.lambda0_um) +
           design.alpha_sub * effective_index(idx, design.core_width_um, design.lambda0_um);
}

RootResult solve_athermal_core_width(const WaveguideDesign& design, const Materials& materials,
                                     double temperature_c, double a_lo_um, double a_hi_um,
                                     const BisectionOptions& opts) {
    if (!(a_lo_um > 0)) throw DomainError("core width bracket must be positive");
    auto residual = [&](double a) {
        WaveguideDesign trial = design;
        trial.core_width_um = a;
        return athermal_residual(trial, materials, temperature_c);
    };
    return bisect(residual, a_lo_um, a_hi_um, opts);
}

ThermalResponse thermal_scan(const WaveguideDesign& design, const Materials& materials,
                             std::span<const double> temperatures_c) {
    if (temperatures_c.empty()) throw ConfigError("temperature grid is empty");
    if (!std::is_sorted(temperatures_c.begin(), temperatures_c.end()))
        throw ConfigError("temperature grid must be sorted");

    const double nc0 = reference_effective_index(design, materials);
    ThermalResponse out;
    const auto n = temperatures_c.size();
    out.temperatures.assign(temperatures_c.begin(), temperatures_c.end());
    out.n_c.resize(n);
    out.dnc_dT.resize(n);
    out.lambda_c_um.resize(n);
    out.delta_lambda_nm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double T = temperatures_c[i];
        const auto idx = resolve_indices(design, materials, T);
        out.n_c[i] = effective_index(idx, design.core_width_um, design.lambda0_um);
        out.dnc_dT[i] = effective_index_rate(idx, design.core_width_um, design.lambda0_um);
        out.lambda_c_um[i] = design.lambda0_um * (out.n_c[i] / nc0) *
                             std::exp(design.alpha_sub * (T - design.T0));
        out.delta_lambda_nm[i] =
            drift_shift_nm(design.lambda0_um, out.n_c[i], nc0, design.alpha_sub, T - design.T0);
    }
    return out;
}

DriftReport drift_report(const ThermalResponse& response) {
    DriftReport r;
    for (std::size_t i = 0; i < response.size(); ++i) {
        const double shift = std::abs(response.delta_lambda_nm[i]);
        if (shift > r.max_abs_shift_nm) {
            r.max_abs_shift_nm = shift;
            r.at_temperature_c = response.temperatures[i];
        }
        if (i > 0) {
            const double dT = response.temperatures[i] - response.temperatures[i - 1];
            if (dT > 0) {
                const double rate =
                    std::abs(units::um_to_nm(response.lambda_c_um[i] - response.lambda_c_um[i - 1])) /
                    dT;
                r.max_abs_rate_nm_per_c = std::max(r.max_abs_rate_nm_per_c, rate);
            }
        }
    }
    r.within_reference_band = r.max_abs_shift_nm >= DriftReport::reference_band_lo_nm &&
                              r.max_abs_shift_nm <= DriftReport::reference_band_hi_nm;
    return r;
}

}  // namespace awg
