#include "awg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "awg/errors.hpp"

namespace awg {

const ConfigSection* ConfigDocument::find(std::string_view name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Lexing

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

class Cursor {
public:
    Cursor(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= text_.size() || text_[pos_] == '#';
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(line_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string name() {
        skip_ws();
        if (peek() == '"') return quoted();
        const auto start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail(line_, "expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string quoted() {
        expect('"');
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            char c = text_[pos_++];
            if (c == '\\') {
                if (pos_ >= text_.size()) break;
                c = text_[pos_++];
                if (c != '"' && c != '\\') fail(line_, "unsupported escape sequence");
            }
            out += c;
        }
        if (pos_ >= text_.size()) fail(line_, "unterminated string");
        ++pos_;
        return out;
    }

    double number() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                text_[pos_] == '+' || text_[pos_] == '-'))
            ++pos_;
        const auto token = text_.substr(start, pos_ - start);
        std::string_view digits = token;
        if (digits.starts_with('+')) digits.remove_prefix(1);
        double v = 0;
        const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (token.empty() || res.ec != std::errc() || res.ptr != digits.data() + digits.size() ||
            !std::isfinite(v))
            fail(line_, "invalid value '" + std::string(token) + "'");
        return v;
    }

    ConfigValue value() {
        const char c = peek();
        if (c == '"') return quoted();
        if (c == '[') return array();
        if (text_.substr(pos_).starts_with("true") && ends_word(pos_ + 4)) {
            pos_ += 4;
            return true;
        }
        if (text_.substr(pos_).starts_with("false") && ends_word(pos_ + 5)) {
            pos_ += 5;
            return false;
        }
        return number();
    }

private:
    bool ends_word(std::size_t at) const {
        return at >= text_.size() || !is_name_char(text_[at]);
    }

    ConfigValue array() {
        expect('[');
        if (peek() == ']') fail(line_, "empty arrays are not allowed");
        if (peek() == '"') {
            std::vector<std::string> items;
            do {
                items.push_back(quoted());
            } while (peek() == ',' && (++pos_, true));
            expect(']');
            return items;
        }
        std::vector<double> items;
        do {
            items.push_back(number());
        } while (peek() == ',' && (++pos_, true));
        expect(']');
        return items;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

}  // namespace

ConfigDocument parse_config(std::string_view text) {
    ConfigDocument doc;
    std::set<std::string> section_names;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        Cursor cur(line, line_no);
        if (line.front() == '[') {
            cur.expect('[');
            ConfigSection section{.name = cur.name(), .line = line_no};
            cur.expect(']');
            if (!cur.done()) fail(line_no, "trailing characters after section header");
            if (!section_names.insert(section.name).second)
                fail(line_no, "duplicate section [" + section.name + "]");
            doc.sections.push_back(std::move(section));
            continue;
        }
        if (doc.sections.empty()) fail(line_no, "key outside of any [section]");
        ConfigEntry entry{.key = cur.name(), .line = line_no};
        cur.expect('=');
        entry.value = cur.value();
        if (!cur.done()) fail(line_no, "trailing characters after value");
        auto& entries = doc.sections.back().entries;
        if (std::any_of(entries.begin(), entries.end(),
                        [&](const auto& e) { return e.key == entry.key; }))
            fail(line_no, "duplicate key '" + entry.key + "'");
        entries.push_back(std::move(entry));
        if (end == text.size()) break;
    }
    return doc;
}

ConfigDocument load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// Binding

namespace {

double as_number(const ConfigEntry& e) {
    if (const auto* v = std::get_if<double>(&e.value)) return *v;
    fail(e.line, "'" + e.key + "' must be a number");
}

int as_int(const ConfigEntry& e) {
    const double v = as_number(e);
    if (v != std::floor(v) || std::abs(v) > 1e9) fail(e.line, "'" + e.key + "' must be an integer");
    return static_cast<int>(v);
}

bool as_bool(const ConfigEntry& e) {
    if (const auto* v = std::get_if<bool>(&e.value)) return *v;
    fail(e.line, "'" + e.key + "' must be true or false");
}

const std::string& as_string(const ConfigEntry& e) {
    if (const auto* v = std::get_if<std::string>(&e.value)) return *v;
    fail(e.line, "'" + e.key + "' must be a string");
}

std::vector<double> as_numbers(const ConfigEntry& e) {
    if (const auto* v = std::get_if<std::vector<double>>(&e.value)) return *v;
    if (const auto* v = std::get_if<double>(&e.value)) return {*v};
    fail(e.line, "'" + e.key + "' must be a number array");
}

std::vector<std::string> as_strings(const ConfigEntry& e) {
    if (const auto* v = std::get_if<std::vector<std::string>>(&e.value)) return *v;
    if (const auto* v = std::get_if<std::string>(&e.value)) return {*v};
    fail(e.line, "'" + e.key + "' must be a string array");
}

using Binder = std::function<void(const ConfigEntry&)>;

void bind_section(const ConfigSection& section, const std::map<std::string, Binder>& binders) {
    for (const auto& e : section.entries) {
        const auto it = binders.find(e.key);
        if (it == binders.end())
            fail(e.line, "unknown key '" + e.key + "' in [" + section.name + "]");
        try {
            it->second(e);
        } catch (const UnknownScenario&) {
            throw;
        } catch (const ConfigError& ex) {
            if (std::string_view(ex.what()).starts_with("config line")) throw;
            fail(e.line, ex.what());
        } catch (const Error& ex) {
            fail(e.line, ex.what());
        }
    }
}

template <class T>
Binder number_into(T& target) {
    return [&target](const ConfigEntry& e) { target = as_number(e); };
}

}  // namespace

SweepSpec SweepDefinition::to_spec(const Scenario& base) const {
    SweepSpec spec;
    spec.id = id;
    spec.base = base;
    spec.axes = axes;
    spec.outputs = outputs;
    spec.eval_lambda_um = eval_lambda_um;
    return spec;
}

RunConfig build_run_config(const ConfigDocument& doc) {
    RunConfig cfg;
    auto& s = cfg.scenario;
    auto& core = s.materials.core;
    auto& clad = s.materials.cladding;
    auto& d = s.design;
    auto& b = s.budget;
    auto& g = s.grids;
    std::optional<SweepDefinition> sweep;

    const std::map<std::string, std::map<std::string, Binder>> sections{
        {"linbo3",
         {{"A1", number_into(core.A1)}, {"A2", number_into(core.A2)}, {"A3", number_into(core.A3)},
          {"A4", number_into(core.A4)}, {"A5", number_into(core.A5)}, {"A6", number_into(core.A6)},
          {"A7", number_into(core.A7)}, {"A8", number_into(core.A8)}, {"A9", number_into(core.A9)},
          {"A10", number_into(core.A10)}, {"T0", number_into(core.T0)}}},
        {"pmma",
         {{"C1", number_into(clad.C1)}, {"C2_base", number_into(clad.C2_base)},
          {"C3", number_into(clad.C3)}, {"C4_base", number_into(clad.C4_base)},
          {"C5", number_into(clad.C5)}, {"C6", number_into(clad.C6)},
          {"T0", number_into(clad.T0)}}},
        {"design",
         {{"a", number_into(d.core_width_um)}, {"n1", number_into(d.n1)}, {"n2", number_into(d.n2)},
          {"alpha_sub", number_into(d.alpha_sub)}, {"lambda0", number_into(d.lambda0_um)},
          {"T0", number_into(d.T0)},
          {"index_mode", [&](const ConfigEntry& e) { d.index_mode = parse_index_mode(as_string(e)); }}}},
        {"budget",
         {{"L", number_into(b.fiber_length_km)},
          {"NL", [&](const ConfigEntry& e) { b.num_links = as_int(e); }},
          {"Nch", [&](const ConfigEntry& e) { b.num_channels = as_int(e); }},
          {"lambda_i", number_into(b.lambda_i_um)}, {"lambda_f", number_into(b.lambda_f_um)},
          {"T", number_into(b.temperature_c)},
          {"source_linewidth_nm", [&](const ConfigEntry& e) { b.source_linewidth_nm = as_number(e); }}}},
        {"options",
         {{"derivative_mode",
           [&](const ConfigEntry& e) { s.options.derivative = parse_derivative_mode(as_string(e)); }},
          {"y", [&](const ConfigEntry& e) { s.options.y = YFactor::parse(as_string(e)); }}}},
        {"grid",
         {{"T_min", number_into(g.T_min)}, {"T_max", number_into(g.T_max)},
          {"T_step", number_into(g.T_step)}, {"lambda_min", number_into(g.lambda_min_um)},
          {"lambda_max", number_into(g.lambda_max_um)}, {"lambda_step", number_into(g.lambda_step_um)}}},
        {"legends",
         {{"n1", [&](const ConfigEntry& e) { s.legends.core_indices = as_numbers(e); }},
          {"n2", [&](const ConfigEntry& e) { s.legends.cladding_indices = as_numbers(e); }},
          {"a", [&](const ConfigEntry& e) { s.legends.core_widths_um = as_numbers(e); }},
          {"T", [&](const ConfigEntry& e) { s.legends.temperatures_c = as_numbers(e); }}}},
        {"solve",
         {{"a_lo", number_into(cfg.solve.a_lo_um)}, {"a_hi", number_into(cfg.solve.a_hi_um)},
          {"T", number_into(cfg.solve.temperature_c)}}},
        {"output",
         {{"dir", [&](const ConfigEntry& e) { cfg.out_dir = as_string(e); }},
          {"emit_gnuplot", [&](const ConfigEntry& e) { cfg.emit_gnuplot = as_bool(e); }},
          {"figures",
           [&](const ConfigEntry& e) {
               const auto names = as_strings(e);
               cfg.figures.clear();
               for (const auto& n : names) {
                   if (n == "all") {
                       cfg.figures = all_figures();
                       break;
                   }
                   cfg.figures.push_back(parse_figure_id(n));
               }
           }}}},
        {"sweep",
         {{"id", [&](const ConfigEntry& e) { sweep->id = as_string(e); }},
          {"outputs", [&](const ConfigEntry& e) { sweep->outputs = as_strings(e); }},
          {"eval_lambda", [&](const ConfigEntry& e) { sweep->eval_lambda_um = as_number(e); }}}},
    };

    for (const auto& section : doc.sections) {
        if (section.name == "sweep.axes") {
            if (!sweep) sweep.emplace();
            for (const auto& e : section.entries) sweep->axes.push_back({e.key, as_numbers(e)});
            continue;
        }
        const auto it = sections.find(section.name);
        if (it == sections.end())
            fail(section.line, "unknown section [" + section.name + "]");
        if (section.name == "sweep" && !sweep) sweep.emplace();
        bind_section(section, it->second);
    }

    if (sweep) {
        // Validate paths and outputs now so a bad sweep is a config error up front.
        sweep->to_spec(s).validate();
    }
    cfg.sweep = std::move(sweep);
    return cfg;
}

}  // namespace awg
