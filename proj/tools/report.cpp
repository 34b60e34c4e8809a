#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace lowtemp::cli
{

std::string format_real(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) {
        throw std::runtime_error("format_real: conversion failed");
    }
    return std::string(buf, end);
}

namespace
{

bool needs_quotes(const std::string &cell)
{
    return cell.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_cell(const std::string &cell)
{
    if (!needs_quotes(cell)) {
        return cell;
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json json_cell(const std::string &cell, CellKind kind)
{
    switch (kind) {
    case CellKind::integer:
        return nlohmann::ordered_json::parse(cell);
    case CellKind::real: {
        double v = 0.0;
        std::from_chars(cell.data(), cell.data() + cell.size(), v);
        return v;
    }
    case CellKind::rational:
    case CellKind::text:
        break;
    }
    return cell;
}

} // namespace

std::string to_csv(const Table &t)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << csv_cell(t.columns[i].name);
    }
    os << "\n";
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_cell(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const Table &t)
{
    nlohmann::ordered_json doc;
    doc["command"] = t.command;
    doc["params"] = t.params;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[t.columns[i].name] = json_cell(row[i], t.columns[i].kind);
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

std::string to_plain(const Table &t)
{
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        width[i] = t.columns[i].name.size();
        for (const auto &row : t.rows) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::ostringstream os;
    for (const auto &[key, value] : t.params.items()) {
        os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    auto emit = [&](auto get) {
        std::string line;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            const std::string cell = get(i);
            const bool right = t.columns[i].kind != CellKind::text;
            const std::string pad(width[i] - cell.size(), ' ');
            line += (i ? "  " : "") + (right ? pad + cell : cell + pad);
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        os << line << "\n";
    };
    emit([&](std::size_t i) { return t.columns[i].name; });
    for (const auto &row : t.rows) {
        emit([&](std::size_t i) { return row[i]; });
    }
    return os.str();
}

std::string render(const Table &t, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        return to_csv(t);
    case OutputFormat::json:
        return to_json(t);
    case OutputFormat::plain:
        break;
    }
    return to_plain(t);
}

Table parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string cell;
    bool quoted = false, cell_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cell += c;
            }
            continue;
        }
        if (c == '"' && !cell_started) {
            quoted = cell_started = true;
        } else if (c == ',') {
            record.push_back(std::move(cell));
            cell.clear();
            cell_started = false;
        } else if (c == '\n') {
            record.push_back(std::move(cell));
            records.push_back(std::move(record));
            cell.clear();
            record.clear();
            cell_started = false;
        } else {
            cell += c;
            cell_started = true;
        }
    }
    if (quoted) {
        throw std::runtime_error("parse_csv: unterminated quoted cell");
    }
    if (cell_started || !record.empty()) {
        record.push_back(std::move(cell));
        records.push_back(std::move(record));
    }
    if (records.empty()) {
        throw std::runtime_error("parse_csv: missing header row");
    }
    Table t;
    for (auto &name : records.front()) {
        t.columns.push_back({std::move(name), CellKind::text});
    }
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != t.columns.size()) {
            throw std::runtime_error("parse_csv: row " + std::to_string(r) + " has the wrong number of cells");
        }
        t.rows.push_back(std::move(records[r]));
    }
    return t;
}

void write_file_atomically(const std::filesystem::path &path, std::string_view contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

} // namespace lowtemp::cli
