#pragma once

#include <string>
#include <vector>

// Rendering of result tables as aligned text, CSV, or JSON lines. All
// numeric formatting goes through snprintf with explicit precision, so
// output is byte-identical across runs and locale-independent ('.' decimal
// separator, no grouping).

namespace arlb::fmt {

enum class Format { table, csv, jsonl };

struct OutputSpec {
    Format format = Format::table;
    int precision = 5;        // decimal places, 1..15
    std::string destination;  // empty = stdout; relative paths resolve
                              // against the ARLB_OUTPUT_DIR env var if set
};

enum class CellKind { text, number, boolean };

struct Column {
    std::string name;
    CellKind kind = CellKind::number;
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<std::string>> rows;  // cells pre-formatted
};

// Fixed-point and scientific renderings with the given decimal count.
std::string fixed(double x, int precision);
std::string sci(double x, int precision);
std::string integer(long x);
std::string boolean(bool b);

Format parse_format(const std::string& name);  // throws std::domain_error

// Render the table in the requested format. Empty cells stay empty ("" in
// CSV, null in JSON lines).
std::string render(const Table& table, Format format);

// Write to spec.destination (stdout when empty), honoring ARLB_OUTPUT_DIR
// for relative paths.
void write_output(const std::string& content, const OutputSpec& spec);

// The resolved path write_output would use; empty means stdout.
std::string resolve_destination(const std::string& destination);

} // namespace arlb::fmt
