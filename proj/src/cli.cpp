#include "awg/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "awg/config.hpp"
#include "awg/errors.hpp"
#include "awg/link.hpp"
#include "awg/materials.hpp"
#include "awg/scenarios.hpp"
#include "awg/table.hpp"
#include "awg/waveguide.hpp"

namespace awg::cli {

namespace fs = std::filesystem;

namespace {

/// Files staged in memory and committed together once all work is done.
class OutputSet {
public:
    void add(std::string name, std::string content) {
        files_.emplace_back(std::move(name), std::move(content));
    }

    /// Writes every file to a temporary sibling, then renames them into place.
    void commit(const fs::path& dir) const {
        fs::create_directories(dir);
        std::vector<fs::path> staged;
        try {
            for (const auto& [name, content] : files_) {
                const fs::path tmp = dir / ("." + name + ".tmp");
                std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
                if (!f) throw ConfigError("cannot write to output directory '" + dir.string() + "'");
                staged.push_back(tmp);
                f << content;
                if (!f.flush()) throw ConfigError("failed writing '" + tmp.string() + "'");
            }
        } catch (...) {
            std::error_code ec;
            for (const auto& p : staged) fs::remove(p, ec);
            throw;
        }
        for (std::size_t i = 0; i < files_.size(); ++i)
            fs::rename(staged[i], dir / files_[i].first);
    }

    const auto& files() const { return files_; }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

struct GlobalFlags {
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<std::string> derivative_mode;
    std::optional<std::string> index_mode;
    bool emit_gnuplot = false;
};

RunConfig resolve_config(const GlobalFlags& flags) {
    RunConfig cfg;
    if (!flags.config_path.empty()) cfg = build_run_config(load_config_file(flags.config_path));
    if (flags.out_dir) cfg.out_dir = *flags.out_dir;
    if (flags.derivative_mode)
        cfg.scenario.options.derivative = parse_derivative_mode(*flags.derivative_mode);
    if (flags.index_mode) cfg.scenario.design.index_mode = parse_index_mode(*flags.index_mode);
    if (flags.emit_gnuplot) cfg.emit_gnuplot = true;
    return cfg;
}

std::string fmt(double v) { return format_number(v); }

// ---------------------------------------------------------------------------
// Self check

std::string describe(const SelfCheckReport& r) {
    std::string out;
    for (const auto& d : r.derivatives) {
        char line[256];
        std::snprintf(line, sizeof line, "%-7s %-14s max_rel_err=%.3e at lambda=%s um T=%s C  %s\n",
                      std::string(to_string(r.material)).c_str(), d.name.c_str(),
                      d.max_relative_error, fmt(d.at_lambda_um).c_str(),
                      fmt(d.at_temperature_c).c_str(),
                      d.tolerance > 0 ? (d.passed() ? "PASS" : "FAIL") : "report-only");
        out += line;
    }
    return out;
}

std::string self_check(const RunConfig& cfg, bool& passed) {
    const auto lambdas = cfg.scenario.grids.wavelengths();
    const auto temps = cfg.scenario.grids.temperatures();
    const auto mode = cfg.scenario.options.derivative;
    const auto core =
        derivative_self_check(cfg.scenario.materials, MaterialId::linbo3, lambdas, temps, mode);
    const auto clad =
        derivative_self_check(cfg.scenario.materials, MaterialId::pmma, lambdas, temps, mode);
    passed = core.passed() && clad.passed();
    return "derivative self check (" + std::string(to_string(mode)) + " mode, " +
           std::to_string(core.points) + " points)\n" + describe(core) + describe(clad);
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    bool passed = false;
    const auto report = self_check(cfg, passed);
    out << report;
    if (!passed) {
        err << "derivative self check failed\n";
        return kDomainError;
    }
    OutputSet files;
    files.add("selfcheck.txt", report);
    files.commit(cfg.out_dir);
    return kSuccess;
}

int cmd_materials(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& m = cfg.scenario.materials;
    const auto mode = cfg.scenario.options.derivative;
    SweepTable table(
        {"lambda_um", "T_C", "n1", "dn1_dlam", "d2n1_dlam2", "dn1_dT", "n2", "dn2_dT"});
    for (double l : cfg.scenario.grids.wavelengths()) {
        for (double T : cfg.scenario.grids.temperatures()) {
            const auto core = sample_linbo3(m.core, l, T, mode);
            const auto clad = sample_pmma(m.cladding, l, T);
            table.add_row({l, T, core.n, core.dn_dlambda, core.d2n_dlambda2, core.dn_dT, clad.n,
                           clad.dn_dT});
        }
    }
    table.metadata() = cfg.scenario.snapshot();

    bool passed = false;
    const auto report = self_check(cfg, passed);
    out << report;
    if (!passed) {
        err << "derivative self check failed; no files written\n";
        return kDomainError;
    }
    OutputSet files;
    files.add("materials.csv", to_csv(table));
    files.add("selfcheck.txt", report);
    files.commit(cfg.out_dir);
    out << "wrote " << table.num_rows() << " rows to " << (fs::path(cfg.out_dir) / "materials.csv").string()
        << "\n";
    return kSuccess;
}

struct AthermalArgs {
    bool solve = false;
    std::optional<double> a_lo, a_hi, temperature;
};

int cmd_athermal(const RunConfig& cfg, const AthermalArgs& args, std::ostream& out) {
    const auto& s = cfg.scenario;
    if (args.solve) {
        const double lo = args.a_lo.value_or(cfg.solve.a_lo_um);
        const double hi = args.a_hi.value_or(cfg.solve.a_hi_um);
        const double T = args.temperature.value_or(cfg.solve.temperature_c);
        const auto root = solve_athermal_core_width(s.design, s.materials, T, lo, hi);
        out << "a* = " << fmt(root.root) << " um\n"
            << "residual = " << fmt(root.residual) << "\n"
            << "iterations = " << root.iterations << "\n";
        return kSuccess;
    }

    const auto T = s.grids.temperatures();
    const auto resp = thermal_scan(s.design, s.materials, T);
    SweepTable table({"T_C", "n_c", "dnc_dT", "lambda_c_um", "delta_lambda_nm"});
    for (std::size_t i = 0; i < resp.size(); ++i)
        table.add_row({resp.temperatures[i], resp.n_c[i], resp.dnc_dT[i], resp.lambda_c_um[i],
                       resp.delta_lambda_nm[i]});
    table.metadata() = s.snapshot();

    const auto drift = drift_report(resp);
    OutputSet files;
    files.add("athermal.csv", to_csv(table));
    files.commit(cfg.out_dir);

    out << "max |delta_lambda| = " << fmt(drift.max_abs_shift_nm) << " nm at T = "
        << fmt(drift.at_temperature_c) << " C over [" << fmt(T.front()) << ", " << fmt(T.back())
        << "] C\n";
    out << "max |d lambda_c / dT| = " << fmt(drift.max_abs_rate_nm_per_c) << " nm/C\n";
    if (drift.within_reference_band) {
        out << "REPRODUCED: shift lies in the reference band " << fmt(DriftReport::reference_band_lo_nm)
            << "-" << fmt(DriftReport::reference_band_hi_nm) << " nm\n";
    } else {
        out << "DEVIATION: computed max shift " << fmt(drift.max_abs_shift_nm)
            << " nm vs reference band " << fmt(DriftReport::reference_band_lo_nm) << "-"
            << fmt(DriftReport::reference_band_hi_nm) << " nm; computed max rate "
            << fmt(drift.max_abs_rate_nm_per_c) << " nm/C vs reference rate "
            << fmt(DriftReport::reference_rate_nm_per_c)
            << " nm/C (the two reference figures are mutually inconsistent)\n";
    }
    return kSuccess;
}

SweepTable link_table(const RunConfig& cfg, const std::vector<std::pair<double, int>>& points,
                      bool& below_cutoff) {
    const auto& s = cfg.scenario;
    SweepTable table({"lambda_um", "Dm", "Dw", "Dt", "delta_tau_ns", "Brm_Gbps", "BrLink_Gbps",
                      "NL", "Nch", "T_C"});
    below_cutoff = false;
    for (const auto& [lambda, links] : points) {
        LinkBudget b = s.budget;
        b.num_links = links;
        const auto x = evaluate_link(s.design, s.materials, b, lambda, s.options);
        below_cutoff = below_cutoff || below_b_cutoff(x.V);
        table.add_row({lambda, x.Dm, x.Dw, x.Dt, x.delta_tau_ns, x.Brm_Gbps, x.BrLink_Gbps,
                       static_cast<double>(b.num_links), static_cast<double>(b.num_channels),
                       b.temperature_c});
    }
    table.metadata() = s.snapshot();
    return table;
}

int cmd_dispersion(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<double, int>> points;
    for (double l : cfg.scenario.grids.wavelengths()) points.emplace_back(l, cfg.scenario.budget.num_links);
    bool warn = false;
    const auto table = link_table(cfg, points, warn);
    if (warn) err << "warning: V below the b(V) cutoff at some wavelengths\n";
    OutputSet files;
    files.add("dispersion.csv", to_csv(table));
    files.commit(cfg.out_dir);
    out << "wrote " << table.num_rows() << " rows to "
        << (fs::path(cfg.out_dir) / "dispersion.csv").string() << "\n";
    return kSuccess;
}

int cmd_mtdm(const RunConfig& cfg, std::optional<double> lambda, std::ostream& out,
             std::ostream& err) {
    const double l = lambda.value_or(cfg.scenario.design.lambda0_um);
    std::vector<std::pair<double, int>> points;
    for (int nl = 1; nl <= LinkBudget::kMaxLinks; ++nl) points.emplace_back(l, nl);
    bool warn = false;
    const auto table = link_table(cfg, points, warn);
    if (warn) err << "warning: V below the b(V) cutoff\n";
    OutputSet files;
    files.add("mtdm.csv", to_csv(table));
    files.commit(cfg.out_dir);
    out << "wrote " << table.num_rows() << " rows to " << (fs::path(cfg.out_dir) / "mtdm.csv").string()
        << "\n";
    return kSuccess;
}

int cmd_figures(const RunConfig& cfg, const std::vector<std::string>& ids, std::ostream& out) {
    std::vector<FigureId> figures = cfg.figures;
    if (!ids.empty()) {
        figures.clear();
        for (const auto& id : ids) {
            if (id == "all") {
                figures = all_figures();
                break;
            }
            figures.push_back(parse_figure_id(id));
        }
    }

    std::vector<std::pair<std::string, SweepTable>> tables;
    for (auto id : figures) tables.emplace_back(to_string(id), run_figure(id, cfg.scenario));

    OutputSet files;
    std::vector<std::pair<std::string, const SweepTable*>> manifest;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto& [name, table] = tables[i];
        const std::string csv = name + ".csv";
        files.add(csv, to_csv(table));
        if (cfg.emit_gnuplot) files.add(name + ".gp", gnuplot_script(figures[i], table, csv));
        manifest.emplace_back(csv, &table);
    }
    files.add("manifest.txt", to_manifest(manifest));
    files.commit(cfg.out_dir);

    for (std::size_t i = 0; i < tables.size(); ++i) {
        out << tables[i].first << ": " << tables[i].second.num_rows() << " rows\n";
        for (const auto& c : check_figure_trends(figures[i], tables[i].second, cfg.scenario))
            out << "  [" << (c.passed ? "PASS" : "FAIL") << (c.gating ? "" : ", informational")
                << "] " << c.name << (c.detail.empty() ? "" : " - " + c.detail) << "\n";
    }
    return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.sweep) throw ConfigError("the sweep command needs a [sweep] section in --config");
    const auto spec = cfg.sweep->to_spec(cfg.scenario);
    const auto table = run_sweep(spec);
    const std::string csv = "sweep_" + spec.id + ".csv";
    OutputSet files;
    files.add(csv, to_csv(table));
    files.add("manifest.txt", to_manifest({{csv, &table}}));
    files.commit(cfg.out_dir);
    out << "wrote " << table.num_rows() << " rows to " << (fs::path(cfg.out_dir) / csv).string()
        << "\n";
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Athermal LiNbO3/PMMA AWG and MTDM link-capacity calculator", "awgcalc"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--config", flags.config_path, "Configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", flags.out_dir, "Output directory (default: out)");
    app.add_option("--derivative-mode", flags.derivative_mode, "paper|exact")
        ->check(CLI::IsMember({"paper", "exact"}));
    app.add_option("--index-mode", flags.index_mode, "anchored|material")
        ->check(CLI::IsMember({"anchored", "material"}));
    app.add_flag("--emit-gnuplot", flags.emit_gnuplot, "Write a gnuplot script per figure");

    auto* materials = app.add_subcommand("materials", "Tabulate indices and derivatives");
    auto* selfcheck = app.add_subcommand("selfcheck", "Check analytic derivatives against finite differences");
    auto* athermal = app.add_subcommand("athermal", "Thermal drift scan or athermal core-width solve");
    AthermalArgs athermal_args;
    athermal->add_flag("--solve", athermal_args.solve, "Solve for the athermal core width");
    athermal->add_option("--a-lo", athermal_args.a_lo, "Lower bracket (um)");
    athermal->add_option("--a-hi", athermal_args.a_hi, "Upper bracket (um)");
    athermal->add_option("--T", athermal_args.temperature, "Solve temperature (C)");
    auto* dispersion = app.add_subcommand("dispersion", "Dispersion and bit rate versus wavelength");
    auto* mtdm = app.add_subcommand("mtdm", "Bit rates versus number of links");
    std::optional<double> mtdm_lambda;
    mtdm->add_option("--lambda", mtdm_lambda, "Evaluation wavelength (um)");
    auto* figures = app.add_subcommand("figures", "Regenerate figure datasets (fig4..fig13 or all)");
    std::vector<std::string> figure_ids;
    figures->add_option("ids", figure_ids, "Figure ids");
    auto* sweep = app.add_subcommand("sweep", "Run the [sweep] section of the config");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        const auto cfg = resolve_config(flags);
        if (materials->parsed()) return cmd_materials(cfg, out, err);
        if (selfcheck->parsed()) return cmd_selfcheck(cfg, out, err);
        if (athermal->parsed()) return cmd_athermal(cfg, athermal_args, out);
        if (dispersion->parsed()) return cmd_dispersion(cfg, out, err);
        if (mtdm->parsed()) return cmd_mtdm(cfg, mtdm_lambda, out, err);
        if (figures->parsed()) return cmd_figures(cfg, figure_ids, out);
        if (sweep->parsed()) return cmd_sweep(cfg, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace awg::cli
