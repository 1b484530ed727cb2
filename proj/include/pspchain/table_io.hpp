#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pspchain {

/// A column-oriented result table. CSV output uses a one-line header and
/// 17 significant digits for reals (lossless double round trip); JSON
/// output mirrors the columns as arrays.
struct Table {
    using Cell = std::variant<long long, double, bool, std::string>;

    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(const std::string& name);

std::string format_double(double v);  // %.17g
std::string to_csv(const Table& table);
std::string to_json(const Table& table);

/// Serializes to the requested format and writes to `path`, or to stdout
/// when `path` is empty.
void write_table(const Table& table, const std::string& path, OutputFormat format);

}  // namespace pspchain
