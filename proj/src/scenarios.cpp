#include "awg/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "awg/errors.hpp"

namespace awg {

// ---------------------------------------------------------------------------
// Grids

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0)) throw ConfigError("grid step must be positive");
    if (!(stop >= start)) throw ConfigError("grid stop must not precede start");
    const double span = (stop - start) / step;
    if (span > 1e7) throw ConfigError("grid too large");
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
    std::vector<double> grid;
    grid.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) grid.push_back(start + static_cast<double>(i) * step);
    if (stop - grid.back() > 1e-9 * step) grid.push_back(stop);
    else grid.back() = stop;
    return grid;
}

std::vector<double> SweepGrids::temperatures() const { return make_grid(T_min, T_max, T_step); }
std::vector<double> SweepGrids::wavelengths() const {
    return make_grid(lambda_min_um, lambda_max_um, lambda_step_um);
}

// ---------------------------------------------------------------------------
// Snapshot

namespace {

std::string join(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += format_number(values[i]);
    }
    return out + "]";
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

Metadata Scenario::snapshot() const {
    const auto& c = materials.core;
    const auto& p = materials.cladding;
    auto f = format_number;
    Metadata m{
        {"linbo3.A1", f(c.A1)},   {"linbo3.A2", f(c.A2)},   {"linbo3.A3", f(c.A3)},
        {"linbo3.A4", f(c.A4)},   {"linbo3.A5", f(c.A5)},   {"linbo3.A6", f(c.A6)},
        {"linbo3.A7", f(c.A7)},   {"linbo3.A8", f(c.A8)},   {"linbo3.A9", f(c.A9)},
        {"linbo3.A10", f(c.A10)}, {"linbo3.T0", f(c.T0)},   {"pmma.C1", f(p.C1)},
        {"pmma.C2_base", f(p.C2_base)}, {"pmma.C3", f(p.C3)}, {"pmma.C4_base", f(p.C4_base)},
        {"pmma.C5", f(p.C5)},     {"pmma.C6", f(p.C6)},     {"pmma.T0", f(p.T0)},
        {"design.a", f(design.core_width_um)}, {"design.n1", f(design.n1)},
        {"design.n2", f(design.n2)}, {"design.alpha_sub", f(design.alpha_sub)},
        {"design.lambda0", f(design.lambda0_um)}, {"design.T0", f(design.T0)},
        {"design.index_mode", std::string(to_string(design.index_mode))},
        {"budget.L", f(budget.fiber_length_km)}, {"budget.NL", std::to_string(budget.num_links)},
        {"budget.Nch", std::to_string(budget.num_channels)},
        {"budget.lambda_i", f(budget.lambda_i_um)}, {"budget.lambda_f", f(budget.lambda_f_um)},
        {"budget.T", f(budget.temperature_c)},
        {"budget.source_linewidth_nm",
         budget.source_linewidth_nm ? f(*budget.source_linewidth_nm) : std::string("slice")},
        {"options.derivative_mode", std::string(to_string(options.derivative))},
        {"options.y", options.y.to_string()},
        {"legends.n1", join(legends.core_indices)}, {"legends.n2", join(legends.cladding_indices)},
        {"legends.a", join(legends.core_widths_um)}, {"legends.T", join(legends.temperatures_c)},
        {"grid.T", f(grids.T_min) + ":" + f(grids.T_step) + ":" + f(grids.T_max)},
        {"grid.lambda",
         f(grids.lambda_min_um) + ":" + f(grids.lambda_step_um) + ":" + f(grids.lambda_max_um)},
    };
    return m;
}

// ---------------------------------------------------------------------------
// Figure catalogue

std::string to_string(FigureId id) { return "fig" + std::to_string(static_cast<int>(id)); }

FigureId parse_figure_id(std::string_view text) {
    for (auto id : all_figures())
        if (text == to_string(id)) return id;
    throw UnknownScenario("unknown figure '" + std::string(text) + "' (expected fig4..fig13)");
}

std::vector<FigureId> all_figures() {
    std::vector<FigureId> ids;
    for (int i = 4; i <= 13; ++i) ids.push_back(static_cast<FigureId>(i));
    return ids;
}

std::string_view figure_title(FigureId id) {
    switch (id) {
        case FigureId::fig4: return "Thermo-optic coefficient dn_c/dT versus temperature";
        case FigureId::fig5: return "Center wavelength shift versus temperature per core index";
        case FigureId::fig6: return "Center wavelength shift versus temperature per cladding index";
        case FigureId::fig7: return "Center wavelength shift versus temperature per core width";
        case FigureId::fig8: return "Total chromatic dispersion versus wavelength per dn";
        case FigureId::fig9: return "MTDM bit rate per channel versus wavelength per dn";
        case FigureId::fig10: return "MTDM bit rate per channel versus number of links per dn";
        case FigureId::fig11: return "MTDM bit rate per link versus number of links per dn";
        case FigureId::fig12: return "MTDM bit rate per channel versus number of links per T";
        case FigureId::fig13: return "MTDM bit rate per link versus number of links per T";
    }
    return "";
}

namespace {

std::string_view y_label(FigureId id) {
    switch (id) {
        case FigureId::fig4: return "dn_c/dT (1/C)";
        case FigureId::fig5:
        case FigureId::fig6:
        case FigureId::fig7: return "delta lambda (nm)";
        case FigureId::fig8: return "Dt (ps/(nm km))";
        case FigureId::fig9:
        case FigureId::fig10:
        case FigureId::fig12: return "Brm (Gbit/s)";
        case FigureId::fig11:
        case FigureId::fig13: return "BrLink (Gbit/s/link)";
    }
    return "";
}

std::vector<double> link_counts() {
    std::vector<double> nl;
    for (int i = 1; i <= LinkBudget::kMaxLinks; ++i) nl.push_back(i);
    return nl;
}

double legend_delta_n(const Scenario& s, double n2) {
    return relative_index_difference(s.design.n1, n2);
}

// Shift curves over T for a set of design variants.
template <class Modify>
SweepTable shift_figure(const Scenario& s, const std::string& label,
                        const std::vector<double>& legend, Modify modify) {
    std::vector<std::string> cols{"T_C"};
    std::vector<ThermalResponse> curves;
    for (double v : legend) {
        cols.push_back("delta_lambda_nm[" + label + "=" + format_number(v) + "]");
        WaveguideDesign d = s.design;
        modify(d, v);
        const auto T = s.grids.temperatures();
        curves.push_back(thermal_scan(d, s.materials, T));
    }
    SweepTable t(cols);
    const auto T = s.grids.temperatures();
    std::vector<double> row(cols.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
        row[0] = T[i];
        for (std::size_t k = 0; k < curves.size(); ++k) row[k + 1] = curves[k].delta_lambda_nm[i];
        t.add_row(row);
    }
    return t;
}

enum class Rate { per_channel, per_link };

double pick(const DispersionSample& s, Rate r) {
    return r == Rate::per_channel ? s.Brm_Gbps : s.BrLink_Gbps;
}

}  // namespace

SweepTable run_figure(FigureId id, const Scenario& s) {
    s.design.validate();
    s.budget.validate();
    SweepTable table;

    switch (id) {
        case FigureId::fig4: {
            const auto T = s.grids.temperatures();
            const auto resp = thermal_scan(s.design, s.materials, T);
            table = SweepTable({"T_C", "dnc_dT"});
            for (std::size_t i = 0; i < T.size(); ++i) table.add_row({T[i], resp.dnc_dT[i]});
            break;
        }
        case FigureId::fig5:
            table = shift_figure(s, "n1", s.legends.core_indices,
                                 [](WaveguideDesign& d, double v) { d.n1 = v; });
            break;
        case FigureId::fig6:
            table = shift_figure(s, "n2", s.legends.cladding_indices,
                                 [](WaveguideDesign& d, double v) { d.n2 = v; });
            break;
        case FigureId::fig7:
            table = shift_figure(s, "a_um", s.legends.core_widths_um,
                                 [](WaveguideDesign& d, double v) { d.core_width_um = v; });
            break;
        case FigureId::fig8:
        case FigureId::fig9: {
            const bool dispersion = id == FigureId::fig8;
            std::vector<std::string> cols{"lambda_um"};
            for (double n2 : s.legends.cladding_indices)
                cols.push_back(std::string(dispersion ? "Dt" : "Brm_Gbps") + "[dn=" +
                               fixed4(legend_delta_n(s, n2)) + "]");
            table = SweepTable(cols);
            std::vector<double> row(cols.size());
            for (double lambda : s.grids.wavelengths()) {
                row[0] = lambda;
                for (std::size_t k = 0; k < s.legends.cladding_indices.size(); ++k) {
                    WaveguideDesign d = s.design;
                    d.n2 = s.legends.cladding_indices[k];
                    const auto sample = evaluate_link(d, s.materials, s.budget, lambda, s.options);
                    row[k + 1] = dispersion ? sample.Dt : sample.Brm_Gbps;
                }
                table.add_row(row);
            }
            break;
        }
        case FigureId::fig10:
        case FigureId::fig11: {
            const Rate rate = id == FigureId::fig10 ? Rate::per_channel : Rate::per_link;
            const std::string name = rate == Rate::per_channel ? "Brm_Gbps" : "BrLink_Gbps";
            std::vector<std::string> cols{"NL"};
            for (double n2 : s.legends.cladding_indices)
                cols.push_back(name + "[dn=" + fixed4(legend_delta_n(s, n2)) + "]");
            table = SweepTable(cols);
            std::vector<double> row(cols.size());
            for (double nl : link_counts()) {
                row[0] = nl;
                LinkBudget b = s.budget;
                b.num_links = static_cast<int>(nl);
                for (std::size_t k = 0; k < s.legends.cladding_indices.size(); ++k) {
                    WaveguideDesign d = s.design;
                    d.n2 = s.legends.cladding_indices[k];
                    row[k + 1] = pick(evaluate_link(d, s.materials, b, d.lambda0_um, s.options), rate);
                }
                table.add_row(row);
            }
            break;
        }
        case FigureId::fig12:
        case FigureId::fig13: {
            const Rate rate = id == FigureId::fig12 ? Rate::per_channel : Rate::per_link;
            const std::string name = rate == Rate::per_channel ? "Brm_Gbps" : "BrLink_Gbps";
            std::vector<std::string> cols{"NL"};
            for (double T : s.legends.temperatures_c)
                cols.push_back(name + "[T_C=" + format_number(T) + "]");
            table = SweepTable(cols);
            std::vector<double> row(cols.size());
            for (double nl : link_counts()) {
                row[0] = nl;
                for (std::size_t k = 0; k < s.legends.temperatures_c.size(); ++k) {
                    LinkBudget b = s.budget;
                    b.num_links = static_cast<int>(nl);
                    b.temperature_c = s.legends.temperatures_c[k];
                    row[k + 1] = pick(
                        evaluate_link(s.design, s.materials, b, s.design.lambda0_um, s.options), rate);
                }
                table.add_row(row);
            }
            break;
        }
    }

    auto& meta = table.metadata();
    meta.emplace_back("figure", to_string(id));
    meta.emplace_back("title", std::string(figure_title(id)));
    for (auto& kv : s.snapshot()) meta.push_back(std::move(kv));
    return table;
}

// ---------------------------------------------------------------------------
// Trend checks

namespace {

std::string describe_point(const SweepTable& t, std::size_t row) {
    return t.columns()[0] + "=" + format_number(t.at(row, 0));
}

TrendCheck strictly_increasing(const SweepTable& t, std::size_t col, bool gating = true) {
    TrendCheck c{.name = t.columns()[col] + " strictly increasing in " + t.columns()[0],
                 .passed = true,
                 .gating = gating};
    for (std::size_t r = 1; r < t.num_rows(); ++r) {
        if (!(t.at(r, col) > t.at(r - 1, col))) {
            c.passed = false;
            c.detail = "not increasing at " + describe_point(t, r) + " (" +
                       format_number(t.at(r - 1, col)) + " -> " + format_number(t.at(r, col)) + ")";
            return c;
        }
    }
    return c;
}

// Columns 1..k ordered by `key`: requires f(value) strictly increasing with key
// at every row.
TrendCheck ordered_by(const SweepTable& t, const std::vector<double>& key, bool magnitude,
                      bool ascending, const std::string& name, bool gating = true) {
    TrendCheck c{.name = name, .passed = true, .gating = gating};
    std::vector<std::size_t> order(key.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] < key[b]; });
    for (std::size_t r = 0; r < t.num_rows(); ++r) {
        for (std::size_t k = 1; k < order.size(); ++k) {
            double prev = t.at(r, order[k - 1] + 1);
            double cur = t.at(r, order[k] + 1);
            if (magnitude) {
                prev = std::abs(prev);
                cur = std::abs(cur);
            }
            const bool ok = ascending ? cur > prev : cur < prev;
            if (!ok) {
                c.passed = false;
                c.detail = "violated at " + describe_point(t, r) + ": " +
                           t.columns()[order[k - 1] + 1] + "=" + format_number(prev) + ", " +
                           t.columns()[order[k] + 1] + "=" + format_number(cur);
                return c;
            }
        }
    }
    return c;
}

std::vector<double> legend_dn(const Scenario& s) {
    std::vector<double> dn;
    for (double n2 : s.legends.cladding_indices) dn.push_back(legend_delta_n(s, n2));
    return dn;
}

}  // namespace

std::vector<TrendCheck> check_figure_trends(FigureId id, const SweepTable& t, const Scenario& s) {
    std::vector<TrendCheck> checks;
    switch (id) {
        case FigureId::fig4: {
            checks.push_back(strictly_increasing(t, 1));
            TrendCheck mag{.name = "|dnc_dT| strictly increasing in T_C", .passed = true,
                           .gating = false};
            for (std::size_t r = 1; r < t.num_rows(); ++r)
                if (!(std::abs(t.at(r, 1)) > std::abs(t.at(r - 1, 1)))) {
                    mag.passed = false;
                    mag.detail = "not increasing at " + describe_point(t, r);
                    break;
                }
            checks.push_back(mag);
            break;
        }
        case FigureId::fig5:
        case FigureId::fig6:
        case FigureId::fig7: {
            const auto T = t.column("T_C");
            const auto it = std::find(T.begin(), T.end(), s.design.T0);
            TrendCheck c{.name = "delta_lambda = 0 at T0 for every curve", .passed = true};
            if (it == T.end()) {
                c.gating = false;
                c.passed = false;
                c.detail = "T0 not on the temperature grid";
            } else {
                const auto r = static_cast<std::size_t>(it - T.begin());
                for (std::size_t col = 1; col < t.num_columns(); ++col)
                    if (t.at(r, col) != 0.0) {
                        c.passed = false;
                        c.detail = t.columns()[col] + " = " + format_number(t.at(r, col));
                    }
            }
            checks.push_back(c);
            break;
        }
        case FigureId::fig8:
            checks.push_back(ordered_by(t, legend_dn(s), true, true,
                                        "|Dt| smaller for smaller dn at every wavelength"));
            break;
        case FigureId::fig9:
            checks.push_back(ordered_by(t, legend_dn(s), false, false,
                                        "Brm larger for smaller dn at every wavelength"));
            break;
        case FigureId::fig10:
        case FigureId::fig11:
            for (std::size_t col = 1; col < t.num_columns(); ++col)
                checks.push_back(strictly_increasing(t, col));
            checks.push_back(ordered_by(t, legend_dn(s), false, false,
                                        "rate larger for smaller dn at every N_L", false));
            break;
        case FigureId::fig12:
        case FigureId::fig13: {
            for (std::size_t col = 1; col < t.num_columns(); ++col)
                checks.push_back(strictly_increasing(t, col));
            const auto& temps = s.legends.temperatures_c;
            const auto lo = std::min_element(temps.begin(), temps.end()) - temps.begin();
            const auto hi = std::max_element(temps.begin(), temps.end()) - temps.begin();
            TrendCheck c{.name = "rate at lowest T >= rate at highest T for every N_L",
                         .passed = true};
            for (std::size_t r = 0; r < t.num_rows(); ++r)
                if (!(t.at(r, lo + 1) >= t.at(r, hi + 1))) {
                    c.passed = false;
                    c.detail = "violated at " + describe_point(t, r);
                    break;
                }
            checks.push_back(c);
            break;
        }
    }
    return checks;
}

std::string gnuplot_script(FigureId id, const SweepTable& table, const std::string& csv_file) {
    std::string gp;
    gp += "set datafile separator ','\n";
    gp += "set key autotitle columnhead\n";
    gp += "set title '" + std::string(figure_title(id)) + "'\n";
    gp += "set xlabel '" + table.columns().front() + "'\n";
    gp += "set ylabel '" + std::string(y_label(id)) + "'\n";
    gp += "set grid\n";
    gp += "plot ";
    for (std::size_t c = 2; c <= table.num_columns(); ++c) {
        if (c > 2) gp += ", \\\n     ";
        gp += (c == 2 ? "'" + csv_file + "'" : std::string("''")) + " using 1:" +
              std::to_string(c) + " with linespoints";
    }
    gp += "\n";
    return gp;
}

// ---------------------------------------------------------------------------
// Generic sweeps

namespace {

constexpr std::array<std::string_view, 14> kPaths{
    "design.a",       "design.n1",      "design.n2", "design.alpha_sub", "design.lambda0",
    "design.T0",      "budget.L",       "budget.NL", "budget.Nch",       "budget.lambda_i",
    "budget.lambda_f", "budget.T",      "budget.source_linewidth_nm", "eval.lambda"};

constexpr std::array<std::string_view, 15> kOutputs{
    "n1", "n2", "delta_n", "V", "n_c", "dnc_dT", "lambda_c_um", "delta_lambda_nm", "residual",
    "Dm", "Dw", "Dt", "delta_tau_ns", "Brm_Gbps", "BrLink_Gbps"};

int as_count(std::string_view path, double value) {
    if (value != std::floor(value) || value < 0 || value > 1e9)
        throw ConfigError(std::string(path) + " must be a non-negative integer, got " +
                          format_number(value));
    return static_cast<int>(value);
}

bool is_thermal(std::string_view out) {
    return out == "n_c" || out == "dnc_dT" || out == "lambda_c_um" || out == "delta_lambda_nm" ||
           out == "residual";
}

}  // namespace

std::span<const std::string_view> sweep_parameter_paths() { return kPaths; }
std::span<const std::string_view> sweep_output_names() { return kOutputs; }

void apply_parameter(Scenario& s, std::optional<double>& eval_lambda, std::string_view path,
                     double value) {
    if (path == "design.a") s.design.core_width_um = value;
    else if (path == "design.n1") s.design.n1 = value;
    else if (path == "design.n2") s.design.n2 = value;
    else if (path == "design.alpha_sub") s.design.alpha_sub = value;
    else if (path == "design.lambda0") s.design.lambda0_um = value;
    else if (path == "design.T0") s.design.T0 = value;
    else if (path == "budget.L") s.budget.fiber_length_km = value;
    else if (path == "budget.NL") s.budget.num_links = as_count(path, value);
    else if (path == "budget.Nch") s.budget.num_channels = as_count(path, value);
    else if (path == "budget.lambda_i") s.budget.lambda_i_um = value;
    else if (path == "budget.lambda_f") s.budget.lambda_f_um = value;
    else if (path == "budget.T") s.budget.temperature_c = value;
    else if (path == "budget.source_linewidth_nm") s.budget.source_linewidth_nm = value;
    else if (path == "eval.lambda") eval_lambda = value;
    else throw ConfigError("unknown sweep parameter '" + std::string(path) + "'");
}

std::vector<double> evaluate_outputs(const Scenario& s, double lambda_um,
                                     std::span<const std::string> outputs) {
    const double T = s.budget.temperature_c;
    const bool need_thermal = std::any_of(outputs.begin(), outputs.end(),
                                          [](const auto& o) { return is_thermal(o); });
    const bool need_link = std::any_of(outputs.begin(), outputs.end(), [](const auto& o) {
        return o == "Dm" || o == "Dw" || o == "Dt" || o == "delta_tau_ns" || o == "Brm_Gbps" ||
               o == "BrLink_Gbps";
    });

    const auto idx = resolve_indices(s.design, s.materials, T, lambda_um);
    double nc = 0, rate = 0, nc0 = 0;
    if (need_thermal) {
        const auto at0 = resolve_indices(s.design, s.materials, T);
        nc = effective_index(at0, s.design.core_width_um, s.design.lambda0_um);
        rate = effective_index_rate(at0, s.design.core_width_um, s.design.lambda0_um);
        nc0 = effective_index(s.design, s.materials, s.design.T0);
    }
    DispersionSample link;
    if (need_link) link = evaluate_link(s.design, s.materials, s.budget, lambda_um, s.options);

    std::vector<double> out;
    out.reserve(outputs.size());
    for (const auto& o : outputs) {
        if (o == "n1") out.push_back(idx.n1);
        else if (o == "n2") out.push_back(idx.n2);
        else if (o == "delta_n") out.push_back(relative_index_difference(idx.n1, idx.n2));
        else if (o == "V")
            out.push_back(normalized_frequency(s.design.core_width_um, lambda_um, idx.n1, idx.n2));
        else if (o == "n_c") out.push_back(nc);
        else if (o == "dnc_dT") out.push_back(rate);
        else if (o == "lambda_c_um")
            out.push_back(s.design.lambda0_um * (nc / nc0) *
                          std::exp(s.design.alpha_sub * (T - s.design.T0)));
        else if (o == "delta_lambda_nm")
            out.push_back(drift_shift_nm(s.design.lambda0_um, nc, nc0, s.design.alpha_sub,
                                         T - s.design.T0));
        else if (o == "residual") out.push_back(rate + s.design.alpha_sub * nc);
        else if (o == "Dm") out.push_back(link.Dm);
        else if (o == "Dw") out.push_back(link.Dw);
        else if (o == "Dt") out.push_back(link.Dt);
        else if (o == "delta_tau_ns") out.push_back(link.delta_tau_ns);
        else if (o == "Brm_Gbps") out.push_back(link.Brm_Gbps);
        else if (o == "BrLink_Gbps") out.push_back(link.BrLink_Gbps);
        else throw ConfigError("unknown sweep output '" + o + "'");
    }
    return out;
}

std::size_t SweepSpec::grid_size() const {
    std::size_t n = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty()) return 0;
        if (n > kMaxPoints / axis.values.size() + 1) return kMaxPoints + 1;
        n *= axis.values.size();
    }
    return n;
}

void SweepSpec::validate() const {
    if (axes.empty()) throw ConfigError("sweep '" + id + "' declares no axes");
    if (outputs.empty()) throw ConfigError("sweep '" + id + "' requests no outputs");
    std::set<std::string> seen;
    for (const auto& axis : axes) {
        if (std::find(kPaths.begin(), kPaths.end(), axis.path) == kPaths.end())
            throw ConfigError("unknown sweep parameter '" + axis.path + "'");
        if (!seen.insert(axis.path).second)
            throw ConfigError("sweep parameter '" + axis.path + "' declared twice");
        if (axis.values.empty())
            throw ConfigError("sweep parameter '" + axis.path + "' has no values");
    }
    for (const auto& o : outputs)
        if (std::find(kOutputs.begin(), kOutputs.end(), o) == kOutputs.end())
            throw ConfigError("unknown sweep output '" + o + "'");
    if (grid_size() > kMaxPoints)
        throw ConfigError("sweep grid exceeds " + std::to_string(kMaxPoints) + " points");
}

SweepTable run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<std::string> cols;
    for (const auto& axis : spec.axes) cols.push_back(axis.path);
    cols.insert(cols.end(), spec.outputs.begin(), spec.outputs.end());
    SweepTable table(cols);

    const std::size_t total = spec.grid_size();
    std::vector<std::size_t> counter(spec.axes.size(), 0);
    std::vector<double> row(cols.size());
    for (std::size_t n = 0; n < total; ++n) {
        Scenario s = spec.base;
        std::optional<double> eval_lambda = spec.eval_lambda_um;
        for (std::size_t k = 0; k < spec.axes.size(); ++k) {
            const double v = spec.axes[k].values[counter[k]];
            row[k] = v;
            apply_parameter(s, eval_lambda, spec.axes[k].path, v);
        }
        const auto values =
            evaluate_outputs(s, eval_lambda.value_or(s.design.lambda0_um), spec.outputs);
        std::copy(values.begin(), values.end(), row.begin() + static_cast<long>(spec.axes.size()));
        table.add_row(row);
        // Odometer: last axis varies fastest.
        for (std::size_t k = spec.axes.size(); k-- > 0;) {
            if (++counter[k] < spec.axes[k].values.size()) break;
            counter[k] = 0;
        }
    }

    auto& meta = table.metadata();
    meta.emplace_back("sweep", spec.id);
    for (const auto& axis : spec.axes) meta.emplace_back("axis." + axis.path, join(axis.values));
    meta.emplace_back("eval.lambda",
                      format_number(spec.eval_lambda_um.value_or(spec.base.design.lambda0_um)));
    for (auto& kv : spec.base.snapshot()) meta.push_back(std::move(kv));
    return table;
}

}  // namespace awg
