#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "awg/materials.hpp"
#include "awg/waveguide.hpp"

namespace awg {

/// Waveguide-dispersion factor Y. `automatic` uses Y(V) = V d2(Vb)/dV^2 of the
/// b(V) approximation, which reduces to 2 (0.9660 / V)^2.
struct YFactor {
    enum class Kind { automatic, constant };
    Kind kind = Kind::automatic;
    double value = 0;

    static YFactor automatic_factor() { return {}; }
    static YFactor constant_factor(double v) { return {Kind::constant, v}; }

    /// Parses "auto" or "constant:<value>".
    static YFactor parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const YFactor&) const = default;
};

/// Y(V) = 2 (0.9660 / V)^2. Throws DomainError for V <= 0.
double waveguide_dispersion_factor(double V);

struct DispersionOptions {
    DerivativeMode derivative = DerivativeMode::exact;
    YFactor y;

    bool operator==(const DispersionOptions&) const = default;
};

struct LinkBudget {
    static constexpr int kMaxLinks = 24;

    double fiber_length_km = 10.0;
    int num_links = 24;
    int num_channels = 16;
    double lambda_i_um = 1.0;
    double lambda_f_um = 1.65;
    double temperature_c = 27.0;
    /// Source linewidth; when unset the per-link spectral slice is used.
    std::optional<double> source_linewidth_nm;

    /// Throws DomainError on any invariant violation.
    void validate() const;
    double effective_linewidth_nm() const;

    bool operator==(const LinkBudget&) const = default;
};

/// (n1^2 - n2^2) / (2 n1^2). Throws DomainError unless n1 > n2 > 0.
double relative_index_difference(double n1, double n2);

// Dispersion coefficients are in ps/(nm*km), wavelengths in um.

/// -(lambda / c) d2n/dlambda2 for a given curvature in um^-2.
double material_dispersion_from_curvature(double lambda_um, double d2n_dlambda2);

/// -(n2 / (c n1)) (dn / lambda) Y for given indices and factor.
double waveguide_dispersion_from(double lambda_um, double n1, double n2, double y_factor);

double material_dispersion(const Materials& materials, double lambda_um, double temperature_c,
                           DerivativeMode mode = DerivativeMode::exact);

/// Indices are resolved through the design's index mode at (lambda, T).
double waveguide_dispersion(const WaveguideDesign& design, const Materials& materials,
                            double lambda_um, double temperature_c, const YFactor& y = {});

double total_dispersion(const WaveguideDesign& design, const Materials& materials,
                        double lambda_um, double temperature_c,
                        const DispersionOptions& options = {});

/// (lambda_f - lambda_i) / N_L in um.
double spectral_slice_width(int num_links, double lambda_i_um = 1.0, double lambda_f_um = 1.65);

/// |Dt| L dlambda, ps/(nm km) x km x nm -> ns.
double pulse_broadening(double dt_ps_per_nm_km, double fiber_length_km, double linewidth_nm);

/// 0.25 / dtau, Gbit/s for dtau in ns.
double mtdm_bitrate_per_channel(double delta_tau_ns);
double mtdm_bitrate_per_link(double delta_tau_ns, int num_channels);

struct DispersionSample {
    double lambda_um = 0;
    double Dm = 0;
    double Dw = 0;
    double Dt = 0;
    double delta_tau_ns = 0;
    double Brm_Gbps = 0;
    double BrLink_Gbps = 0;
    double V = 0;
};

/// Full dispersion -> pulse broadening -> bit-rate chain at one wavelength,
/// at the budget's temperature.
DispersionSample evaluate_link(const WaveguideDesign& design, const Materials& materials,
                               const LinkBudget& budget, double lambda_um,
                               const DispersionOptions& options = {});

}  // namespace awg
