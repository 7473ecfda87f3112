#include "awg/link.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "awg/errors.hpp"
#include "awg/units.hpp"

namespace awg {

YFactor YFactor::parse(std::string_view text) {
    if (text == "auto") return automatic_factor();
    constexpr std::string_view prefix = "constant:";
    if (text.starts_with(prefix)) {
        const std::string number(text.substr(prefix.size()));
        char* end = nullptr;
        const double v = std::strtod(number.c_str(), &end);
        if (!number.empty() && end == number.c_str() + number.size() && std::isfinite(v) && v > 0)
            return constant_factor(v);
    }
    throw ConfigError("Y factor must be 'auto' or 'constant:<positive value>', got '" +
                      std::string(text) + "'");
}

std::string YFactor::to_string() const {
    if (kind == Kind::automatic) return "auto";
    char buf[64];
    std::snprintf(buf, sizeof buf, "constant:%.9g", value);
    return buf;
}

double waveguide_dispersion_factor(double V) {
    if (!(V > 0)) throw DomainError("normalized frequency must be positive");
    const double r = kBCutoffTerm / V;
    return 2.0 * r * r;
}

void LinkBudget::validate() const {
    if (!(fiber_length_km > 0)) throw DomainError("fiber length must be positive");
    if (num_links < 1 || num_links > kMaxLinks)
        throw DomainError("number of links must be in [1, 24], got " + std::to_string(num_links));
    if (num_channels < 1) throw DomainError("number of channels must be >= 1");
    if (!(lambda_i_um > 0 && lambda_f_um > lambda_i_um))
        throw DomainError("band must satisfy lambda_f > lambda_i > 0");
    if (source_linewidth_nm && !(*source_linewidth_nm > 0))
        throw DomainError("source linewidth must be positive");
}

double LinkBudget::effective_linewidth_nm() const {
    if (source_linewidth_nm) return *source_linewidth_nm;
    return units::um_to_nm(spectral_slice_width(num_links, lambda_i_um, lambda_f_um));
}

double relative_index_difference(double n1, double n2) {
    if (!(n2 > 0 && n1 > n2)) throw DomainError("relative index difference needs n1 > n2 > 0");
    return (n1 * n1 - n2 * n2) / (2.0 * n1 * n1);
}

double material_dispersion_from_curvature(double lambda_um, double d2n_dlambda2) {
    const double si = -(units::um_to_m(lambda_um) / units::kSpeedOfLight) *
                      units::per_um2_to_per_m2(d2n_dlambda2);
    return units::s_per_m2_to_ps_per_nm_km(si);
}

double waveguide_dispersion_from(double lambda_um, double n1, double n2, double y_factor) {
    const double dn = relative_index_difference(n1, n2);
    const double si =
        -(n2 / (units::kSpeedOfLight * n1)) * (dn / units::um_to_m(lambda_um)) * y_factor;
    return units::s_per_m2_to_ps_per_nm_km(si);
}

double material_dispersion(const Materials& materials, double lambda_um, double temperature_c,
                           DerivativeMode mode) {
    return material_dispersion_from_curvature(
        lambda_um, materials.core.d2n_dlambda2(lambda_um, temperature_c, mode));
}

namespace {

double y_value(const YFactor& y, double V) {
    return y.kind == YFactor::Kind::constant ? y.value : waveguide_dispersion_factor(V);
}

}  // namespace

double waveguide_dispersion(const WaveguideDesign& design, const Materials& materials,
                            double lambda_um, double temperature_c, const YFactor& y) {
    const auto idx = resolve_indices(design, materials, temperature_c, lambda_um);
    const double V = normalized_frequency(design.core_width_um, lambda_um, idx.n1, idx.n2);
    return waveguide_dispersion_from(lambda_um, idx.n1, idx.n2, y_value(y, V));
}

double total_dispersion(const WaveguideDesign& design, const Materials& materials,
                        double lambda_um, double temperature_c, const DispersionOptions& options) {
    return material_dispersion(materials, lambda_um, temperature_c, options.derivative) +
           waveguide_dispersion(design, materials, lambda_um, temperature_c, options.y);
}

double spectral_slice_width(int num_links, double lambda_i_um, double lambda_f_um) {
    if (num_links < 1) throw DomainError("number of links must be >= 1");
    if (!(lambda_f_um > lambda_i_um)) throw DomainError("band must satisfy lambda_f > lambda_i");
    return (lambda_f_um - lambda_i_um) / num_links;
}

double pulse_broadening(double dt_ps_per_nm_km, double fiber_length_km, double linewidth_nm) {
    if (!(fiber_length_km > 0)) throw DomainError("fiber length must be positive");
    if (!(linewidth_nm > 0)) throw DomainError("source linewidth must be positive");
    return units::ps_to_ns(std::abs(dt_ps_per_nm_km) * fiber_length_km * linewidth_nm);
}

double mtdm_bitrate_per_channel(double delta_tau_ns) {
    if (!(delta_tau_ns > 0)) throw DomainError("pulse broadening must be positive");
    return 0.25 / delta_tau_ns;
}

double mtdm_bitrate_per_link(double delta_tau_ns, int num_channels) {
    if (num_channels < 1) throw DomainError("number of channels must be >= 1");
    return num_channels * mtdm_bitrate_per_channel(delta_tau_ns);
}

DispersionSample evaluate_link(const WaveguideDesign& design, const Materials& materials,
                               const LinkBudget& budget, double lambda_um,
                               const DispersionOptions& options) {
    budget.validate();
    const double T = budget.temperature_c;
    const auto idx = resolve_indices(design, materials, T, lambda_um);

    DispersionSample s;
    s.lambda_um = lambda_um;
    s.V = normalized_frequency(design.core_width_um, lambda_um, idx.n1, idx.n2);
    s.Dm = material_dispersion(materials, lambda_um, T, options.derivative);
    s.Dw = waveguide_dispersion_from(lambda_um, idx.n1, idx.n2, y_value(options.y, s.V));
    s.Dt = s.Dm + s.Dw;
    s.delta_tau_ns = pulse_broadening(s.Dt, budget.fiber_length_km, budget.effective_linewidth_nm());
    s.Brm_Gbps = mtdm_bitrate_per_channel(s.delta_tau_ns);
    s.BrLink_Gbps = mtdm_bitrate_per_link(s.delta_tau_ns, budget.num_channels);
    return s;
}

}  // namespace awg
