#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace awg {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Rectangular numeric dataset with named columns, stored row-major. The
/// metadata carries the resolved parameter snapshot that produced it.
class SweepTable {
public:
    SweepTable() = default;
    explicit SweepTable(std::vector<std::string> columns);

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t num_columns() const { return columns_.size(); }
    std::size_t num_rows() const { return columns_.empty() ? 0 : values_.size() / columns_.size(); }

    /// Throws std::invalid_argument when the row width does not match.
    void add_row(std::span<const double> row);
    void add_row(std::initializer_list<double> row) { add_row(std::span(row.begin(), row.size())); }

    double at(std::size_t row, std::size_t col) const { return values_[row * num_columns() + col]; }
    std::span<const double> row(std::size_t r) const {
        return {values_.data() + r * num_columns(), num_columns()};
    }
    std::size_t column_index(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;

    Metadata& metadata() { return metadata_; }
    const Metadata& metadata() const { return metadata_; }

private:
    std::vector<std::string> columns_;
    std::vector<double> values_;
    Metadata metadata_;
};

/// Locale-independent shortest-of-fixed/scientific rendering with 9
/// significant digits. Negative zero prints as "0".
std::string format_number(double value);

/// CSV with '#'-prefixed "key = value" metadata lines, one header row and LF
/// line endings.
std::string to_csv(const SweepTable& table);

/// Plain-text manifest: one "[dataset]" block per entry followed by its
/// "key = value" snapshot.
std::string to_manifest(const std::vector<std::pair<std::string, const SweepTable*>>& datasets);

}  // namespace awg
