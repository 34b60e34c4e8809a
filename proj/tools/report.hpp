#ifndef LOWTEMP_TOOLS_REPORT_HPP
#define LOWTEMP_TOOLS_REPORT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lowtemp::cli
{

enum class OutputFormat { csv, json, plain };

enum class CellKind { integer, rational, real, text };

struct Column {
    std::string name;
    CellKind kind = CellKind::text;
};

// Tabular command output. Cells hold canonical text: exact rationals as "p"
// or "p/q", reals in shortest round-trip form.
struct Table {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;
};

// Shortest decimal text that parses back to the same double.
std::string format_real(double v);

std::string to_csv(const Table &t);
std::string to_json(const Table &t);
std::string to_plain(const Table &t);
std::string render(const Table &t, OutputFormat format);

// Header and cells of a CSV document produced by to_csv.
Table parse_csv(std::string_view text);

// Writes through a temporary sibling and renames, so a failed write leaves no
// partial file. Throws std::runtime_error on I/O failure.
void write_file_atomically(const std::filesystem::path &path, std::string_view contents);

} // namespace lowtemp::cli

#endif
