#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "awg/scenarios.hpp"

namespace awg {

// Plain-text key/value configuration with [sections], a TOML subset:
//
//   # comment
//   [design]
//   n1 = 2.33
//   index_mode = "anchored"
//   [legends]
//   n2 = [1.45, 1.52, 1.59]
//
// Values are numbers, booleans, double-quoted strings, or single-line arrays
// of numbers or of strings. Keys may contain dots (used by [sweep.axes]).

using ConfigValue =
    std::variant<double, bool, std::string, std::vector<double>, std::vector<std::string>>;

struct ConfigEntry {
    std::string key;
    ConfigValue value;
    int line = 0;
};

struct ConfigSection {
    std::string name;
    std::vector<ConfigEntry> entries;
    int line = 0;
};

struct ConfigDocument {
    std::vector<ConfigSection> sections;

    const ConfigSection* find(std::string_view name) const;
};

/// Throws ConfigError (with the line number) on any syntax error, duplicate
/// section or duplicate key.
ConfigDocument parse_config(std::string_view text);
ConfigDocument load_config_file(const std::filesystem::path& path);

struct SolveSettings {
    double a_lo_um = 0.1;
    double a_hi_um = 20.0;
    double temperature_c = 27.0;
};

/// [sweep] and [sweep.axes] as written; combined with the final scenario into
/// a SweepSpec once command-line overrides are applied.
struct SweepDefinition {
    std::string id = "sweep";
    std::vector<SweepAxis> axes;
    std::vector<std::string> outputs;
    std::optional<double> eval_lambda_um;

    SweepSpec to_spec(const Scenario& base) const;
};

struct RunConfig {
    Scenario scenario;
    SolveSettings solve;
    std::vector<FigureId> figures = all_figures();
    std::optional<SweepDefinition> sweep;
    std::string out_dir = "out";
    bool emit_gnuplot = false;
};

/// Builds a RunConfig from a document, starting from the built-in defaults.
/// Unknown sections, unknown keys and wrongly typed values are rejected.
RunConfig build_run_config(const ConfigDocument& doc);

}  // namespace awg
