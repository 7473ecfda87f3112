#include "awg/table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace awg {

SweepTable::SweepTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void SweepTable::add_row(std::span<const double> row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("row width " + std::to_string(row.size()) +
                                    " does not match column count " +
                                    std::to_string(columns_.size()));
    values_.insert(values_.end(), row.begin(), row.end());
}

std::size_t SweepTable::column_index(const std::string& name) const {
    const auto it = std::find(columns_.begin(), columns_.end(), name);
    if (it == columns_.end()) throw std::out_of_range("no column named '" + name + "'");
    return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<double> SweepTable::column(const std::string& name) const {
    const auto c = column_index(name);
    std::vector<double> out(num_rows());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = at(r, c);
    return out;
}

std::string format_number(double value) {
    if (value == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (const auto& [key, value] : table.metadata()) out += "# " + key + " = " + value + "\n";
    for (std::size_t c = 0; c < table.num_columns(); ++c) {
        if (c) out += ',';
        out += table.columns()[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < table.num_rows(); ++r) {
        for (std::size_t c = 0; c < table.num_columns(); ++c) {
            if (c) out += ',';
            out += format_number(table.at(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string to_manifest(const std::vector<std::pair<std::string, const SweepTable*>>& datasets) {
    std::string out;
    for (const auto& [name, table] : datasets) {
        if (!out.empty()) out += '\n';
        out += "[" + name + "]\n";
        out += "rows = " + std::to_string(table->num_rows()) + "\n";
        for (const auto& [key, value] : table->metadata()) out += key + " = " + value + "\n";
    }
    return out;
}

}  // namespace awg
