#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fencetri/bigint.hpp"

namespace fencetri {

enum class Format { table, csv, json, bfile };

/// Parse a --format value; throws std::invalid_argument for anything but
/// table, csv, json, or bfile.
Format parse_format(const std::string& name);

struct TriangleData {
    std::string family; // "pascal" or "tiling"
    int m = 1;
    std::vector<std::vector<Int>> rows; // rows[n] has n+1 entries
};

/// Render a triangle:
///  - table: right-aligned entries under a k-index header with an
///    n-index column, mirroring the usual figure layout;
///  - csv: one "n,k,value" line per entry;
///  - json: {"family":..., "m":..., "rows":[[...],...]} with values as
///    strings;
///  - bfile: entries flattened row by row, one "index value" line each,
///    indices starting at `offset`.
std::string render_triangle(const TriangleData& t, Format format, long long offset = 0);

/// Render a sequence:
///  - table: the terms on one space-separated line;
///  - csv: one "n,value" line per term (n starts at `offset`);
///  - json: {"kind":..., "m":..., "offset":..., "terms":[...]};
///  - bfile: one "index value" line per term.
std::string render_sequence(const std::string& kind, int m, const std::vector<Int>& terms,
                            Format format, long long offset = 0);

/// OEIS b-file body: "index value\n" per term, exactly one space, no
/// trailing whitespace, every line newline-terminated.
std::string render_bfile(const std::vector<Int>& terms, long long offset);

/// Parse a b-file body back into (offset, terms). Indices must be
/// consecutive; malformed lines raise std::invalid_argument.
std::pair<long long, std::vector<Int>> parse_bfile(const std::string& text);

} // namespace fencetri
