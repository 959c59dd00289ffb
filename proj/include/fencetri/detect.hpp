#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fencetri/series.hpp"

namespace fencetri {

enum class SizeMode { board_length, tile_count };

struct Metatile {
    long long size;     // length l_i or tile count p_i
    long long specials; // s_i
    bool operator==(const Metatile&) const = default;
};

/// A (possibly truncated) list of metatiles for a tiling system, with
/// each metatile reduced to its size measure and special-tile count.
/// `complete` asserts the list is the full metatile set; incomplete
/// lists can only ever refute, never confirm.
struct MetatileSpec {
    SizeMode mode = SizeMode::tile_count;
    bool complete = false;
    std::vector<Metatile> items;
    std::optional<std::string> name;

    /// Parse from JSON text: {"mode": "board_length"|"tile_count",
    /// "complete": bool, "metatiles": [{"size": int, "specials": int},...],
    /// "name": optional string}. Unknown keys are rejected.
    static MetatileSpec from_json(const std::string& text);
    static MetatileSpec from_file(const std::string& path);
};

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

/// One reason a verdict is "no": the violated clause, plus the violating
/// metatile when the clause is universal.
struct Witness {
    std::string clause;
    std::optional<Metatile> metatile;
};

enum class Orientation { direct, row_reversed };

struct DetectReport {
    Verdict riordan = Verdict::unknown;
    Verdict row_reversed = Verdict::unknown;
    std::vector<Witness> witnesses;
    /// Derived (p, q) per orientation that answered "yes".
    std::optional<std::pair<TruncatedSeries, TruncatedSeries>> derived_direct;
    std::optional<std::pair<TruncatedSeries, TruncatedSeries>> derived_row_reversed;
};

/// Decide whether the triangle induced by the metatile system (or its
/// row-reversed version) is a Riordan array.
///
/// The triangle is a Riordan array iff some metatile has size 1 with one
/// special tile and no metatile carries more than one special; the
/// row-reversed triangle is one iff some metatile has size 1 with no
/// specials and every metatile satisfies size - specials in {0, 1}.
/// Universal-clause violations refute even incomplete lists; "yes" needs
/// a complete list. Derived (p, q) series carry order derive_order.
DetectReport detect(const MetatileSpec& spec, int derive_order = 16);

/// Derive the (p, q) pair for a qualifying orientation: with b_i = s_i
/// (direct) or size_i - s_i (row-reversed),
///   p = 1 / (1 - sum_{b_i=0} x^{size_i}),
///   q = (sum_{b_i=1} x^{size_i}) / (1 - sum_{b_i=0} x^{size_i}),
/// truncated to order T. Requires a complete spec whose detect verdict
/// for the orientation is "yes".
std::pair<TruncatedSeries, TruncatedSeries> derive_pq(const MetatileSpec& spec,
                                                      Orientation orientation, int T);

/// Triangle T(n, k) = d_{n,0} d_{k,0} + sum_i T(n - size_i, k - s_i)
/// for rows 0..N (zero for negative arguments). Requires a complete spec.
std::vector<std::vector<Int>> recursion_counts(const MetatileSpec& spec, int N);

} // namespace fencetri
