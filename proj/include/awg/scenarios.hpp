#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "awg/link.hpp"
#include "awg/materials.hpp"
#include "awg/table.hpp"
#include "awg/waveguide.hpp"

namespace awg {

/// Legend values of the multi-curve figures.
struct FigureLegends {
    std::vector<double> core_indices{2.20, 2.33, 2.46};     // fig5
    std::vector<double> cladding_indices{1.45, 1.52, 1.59};  // fig6, and dn for figs 8-11
    std::vector<double> core_widths_um{3.0, 5.0, 7.0};      // fig7
    std::vector<double> temperatures_c{27.0, 45.0, 70.0};   // figs 12-13

    bool operator==(const FigureLegends&) const = default;
};

struct SweepGrids {
    double T_min = 20.0;
    double T_max = 70.0;
    double T_step = 1.0;
    double lambda_min_um = 1.0;
    double lambda_max_um = 1.64;
    double lambda_step_um = 0.01;

    std::vector<double> temperatures() const;
    std::vector<double> wavelengths() const;

    bool operator==(const SweepGrids&) const = default;
};

/// Inclusive arithmetic grid start, start+step, ..., with `stop` appended when
/// the step does not land on it. Points are computed as start + i*step, never
/// accumulated. Throws ConfigError on a non-positive step or stop < start.
std::vector<double> make_grid(double start, double stop, double step);

/// Everything a figure or sweep needs, fully resolved.
struct Scenario {
    Materials materials;
    WaveguideDesign design;
    LinkBudget budget;
    DispersionOptions options;
    FigureLegends legends;
    SweepGrids grids;

    /// Key/value snapshot of every parameter, sufficient to rerun.
    Metadata snapshot() const;

    bool operator==(const Scenario&) const = default;
};

enum class FigureId { fig4 = 4, fig5, fig6, fig7, fig8, fig9, fig10, fig11, fig12, fig13 };

std::string to_string(FigureId id);
/// Throws UnknownScenario.
FigureId parse_figure_id(std::string_view text);
std::vector<FigureId> all_figures();
std::string_view figure_title(FigureId id);

/// fig4: dn_c/dT vs T. fig5/6/7: delta-lambda vs T per n1 / n2 / a.
/// fig8: Dt vs lambda per dn. fig9: Brm vs lambda per dn.
/// fig10/11: per-channel / per-link rate vs N_L per dn.
/// fig12/13: per-channel / per-link rate vs N_L per T.
SweepTable run_figure(FigureId id, const Scenario& scenario);

struct TrendCheck {
    std::string name;
    bool passed = false;
    /// Non-gating checks are reported but never fail a run.
    bool gating = true;
    std::string detail;
};

/// Shape assertions each figure dataset is expected to satisfy.
std::vector<TrendCheck> check_figure_trends(FigureId id, const SweepTable& table,
                                            const Scenario& scenario);

/// Gnuplot script plotting `csv_file` (column 1 against every other column).
std::string gnuplot_script(FigureId id, const SweepTable& table, const std::string& csv_file);

// ---------------------------------------------------------------------------
// Generic sweeps

struct SweepAxis {
    std::string path;
    std::vector<double> values;
};

struct SweepSpec {
    static constexpr std::size_t kMaxPoints = 1'000'000;

    std::string id = "sweep";
    Scenario base;
    std::vector<SweepAxis> axes;
    std::vector<std::string> outputs;
    /// Evaluation wavelength for dispersion outputs; defaults to design.lambda0.
    std::optional<double> eval_lambda_um;

    /// Throws ConfigError on unknown paths/outputs, empty axes, duplicate
    /// paths or a grid larger than kMaxPoints.
    void validate() const;
    std::size_t grid_size() const;
};

std::span<const std::string_view> sweep_parameter_paths();
std::span<const std::string_view> sweep_output_names();

/// Sets one named parameter. `eval_lambda` receives "eval.lambda".
void apply_parameter(Scenario& scenario, std::optional<double>& eval_lambda,
                     std::string_view path, double value);

/// Named quantities at the scenario's budget temperature and `lambda_um`.
std::vector<double> evaluate_outputs(const Scenario& scenario, double lambda_um,
                                     std::span<const std::string> outputs);

/// Cartesian product of the axes, first axis outermost. Columns are the axis
/// paths followed by the outputs.
SweepTable run_sweep(const SweepSpec& spec);

}  // namespace awg
