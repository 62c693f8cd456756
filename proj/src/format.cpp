#include "arlb/format.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace arlb::fmt {

namespace {

std::string printf_double(const char* spec, double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, precision, x);
    return buf;
}

// JSON scalar for a pre-formatted cell: numbers and booleans pass through,
// text gets quoted, empty becomes null.
std::string json_scalar(const std::string& cell, CellKind kind) {
    if (cell.empty()) return "null";
    if (kind == CellKind::number || kind == CellKind::boolean) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace

std::string fixed(double x, int precision) {
    return printf_double("%.*f", x, precision);
}

std::string sci(double x, int precision) {
    return printf_double("%.*e", x, precision);
}

std::string integer(long x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%ld", x);
    return buf;
}

std::string boolean(bool b) {
    return b ? "true" : "false";
}

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json-lines") return Format::jsonl;
    throw std::domain_error("unknown format: " + name);
}

std::string render(const Table& table, Format format) {
    const std::size_t ncol = table.columns.size();
    std::string out;
    if (format == Format::csv) {
        for (std::size_t j = 0; j < ncol; ++j) {
            out += table.columns[j].name;
            out += (j + 1 < ncol) ? "," : "\n";
        }
        for (const auto& row : table.rows) {
            for (std::size_t j = 0; j < ncol; ++j) {
                out += row[j];
                out += (j + 1 < ncol) ? "," : "\n";
            }
        }
        return out;
    }
    if (format == Format::jsonl) {
        for (const auto& row : table.rows) {
            out += '{';
            for (std::size_t j = 0; j < ncol; ++j) {
                out += '"' + table.columns[j].name + "\":";
                out += json_scalar(row[j], table.columns[j].kind);
                if (j + 1 < ncol) out += ',';
            }
            out += "}\n";
        }
        return out;
    }
    // Aligned text: headers, rule, rows; numeric columns right-aligned.
    std::vector<std::size_t> width(ncol);
    for (std::size_t j = 0; j < ncol; ++j) width[j] = table.columns[j].name.size();
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < ncol; ++j) width[j] = std::max(width[j], row[j].size());
    }
    auto pad = [&](const std::string& cell, std::size_t j, bool right) {
        const std::string fill(width[j] - cell.size(), ' ');
        return right ? fill + cell : cell + fill;
    };
    for (std::size_t j = 0; j < ncol; ++j) {
        out += pad(table.columns[j].name, j, table.columns[j].kind != CellKind::text);
        out += (j + 1 < ncol) ? "  " : "\n";
    }
    for (std::size_t j = 0; j < ncol; ++j) {
        out += std::string(width[j], '-');
        out += (j + 1 < ncol) ? "  " : "\n";
    }
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < ncol; ++j) {
            out += pad(row[j], j, table.columns[j].kind != CellKind::text);
            out += (j + 1 < ncol) ? "  " : "\n";
        }
    }
    return out;
}

std::string resolve_destination(const std::string& destination) {
    if (destination.empty()) return {};
    const bool is_absolute = destination.front() == '/';
    const char* dir = std::getenv("ARLB_OUTPUT_DIR");
    if (is_absolute || dir == nullptr || *dir == '\0') return destination;
    std::string base(dir);
    if (base.back() != '/') base += '/';
    return base + destination;
}

void write_output(const std::string& content, const OutputSpec& spec) {
    const std::string path = resolve_destination(spec.destination);
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

} // namespace arlb::fmt
