#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fencetri/bigint.hpp"

namespace fencetri {

enum class TileKind { square, fence };

/// One placed tile: a square covering `cell`, or a (1, m-1)-fence whose
/// left post covers `cell` and whose right post covers `cell + m`.
struct Placement {
    TileKind kind;
    int cell; // 1-based
    auto operator<=>(const Placement&) const = default;
};

/// A complete tiling of a 1 x board_length board by squares and
/// (1, m-1)-fences. Construction validates that every cell is covered
/// exactly once and that every fence fits on the board.
class Tiling {
public:
    Tiling(int board_length, int m, std::vector<Placement> tiles);

    int board_length() const { return length_; }
    int m() const { return m_; }
    /// Placements sorted by leftmost covered cell.
    const std::vector<Placement>& placements() const { return tiles_; }
    int tile_count() const { return static_cast<int>(tiles_.size()); }
    int fence_count() const;

    /// Canonical rendering in start-cell order, e.g. "S F(2) S".
    std::string render() const;

    bool operator==(const Tiling&) const = default;

private:
    int length_;
    int m_;
    std::vector<Placement> tiles_;
};

/// All tilings of an L-board with squares and (1, m-1)-fences, exactly
/// once each, in canonical order (at each lowest uncovered cell the
/// square branch precedes the fence branch). Refuses L > 30.
std::vector<Tiling> enumerate_tilings(int L, int m);

/// Fence-count distribution ch{L}{k}_m of the tilings of an L-board,
/// computed by direct enumeration (guard L <= 30). Only nonzero counts
/// appear in the map.
std::map<int, Int> count_by_fences(int L, int m);

/// Same distribution via dynamic programming over (cell, pending-fence
/// mask); no enumeration guard. Must agree with count_by_fences wherever
/// both are defined.
std::map<int, Int> count_by_fences_dp(int L, int m);

enum class Family2Method { oracle, poly, recurrence3, pascal_region };

/// The m-th tiling triangle: entry (n, k) counts the n-tile tilings that
/// use k (1, m-1)-fences (and n-k squares). Thread-safe for concurrent
/// reads.
///
/// Methods:
///  - oracle: board enumeration of the (n+k)-board (guard n+k <= 30);
///  - poly: coefficient k of f_j^{m-r} f_{j+1}^r with n+k = m*j + r;
///  - recurrence3: the ten-term m=3 recurrence (m = 3 only);
///  - pascal_region: Pascal's recurrence on n >= 2k+1, poly elsewhere
///    (m = 3 only).
class Family2Triangle {
public:
    explicit Family2Triangle(int m);

    int modulus() const { return m_; }

    Int entry(long long n, long long k, Family2Method method = Family2Method::poly) const;
    std::vector<Int> row(long long n, Family2Method method = Family2Method::poly) const;

private:
    Int entry_poly(long long n, long long k) const;
    Int entry_recurrence3(long long n, long long k) const;
    Int entry_pascal_region(long long n, long long k) const;

    int m_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Int>> poly_rows_;
    mutable std::vector<std::vector<Int>> rec3_rows_;
    mutable std::map<std::pair<long long, long long>, Int> pr_memo_;
};

Int family2_entry(int m, long long n, long long k,
                  Family2Method method = Family2Method::poly);

/// Total number of n-tile tilings (row sum of the m-th tiling triangle).
Int total_tilings(int m, long long n);

/// First N+1 m=3 row totals B_n from the recurrence
/// B_n = d_{n,0} - d_{n,1} + 2B_{n-1} - B_{n-2} + 3B_{n-3} - 2B_{n-4}.
std::vector<Int> b3_totals(int N);

/// An ordered m-tuple of square-and-domino boards: r boards of length
/// j+1 followed by m-r boards of length j. Each sub-board is a Tiling
/// with m = 1 (its fences are dominoes).
class TupleTiling {
public:
    TupleTiling(int m, int j, int r, std::vector<Tiling> boards);

    int m() const { return m_; }
    int j() const { return j_; }
    int r() const { return r_; }
    const std::vector<Tiling>& boards() const { return boards_; }
    int fence_count() const;
    int tile_count() const;

    bool operator==(const TupleTiling&) const = default;

private:
    int m_, j_, r_;
    std::vector<Tiling> boards_;
};

/// Bijection from a tiling of an (m*j + r)-board to the tuple of r
/// (j+1)-boards and m-r j-boards: cell c goes to board ((c-1) mod m) + 1
/// at position ceil(c/m); fences become dominoes, squares stay squares.
TupleTiling bij_to_tuple(const Tiling& t);

/// Inverse of bij_to_tuple.
Tiling bij_from_tuple(const TupleTiling& tt);

/// Factor a tiling into its metatiles: maximal-cut decomposition at every
/// board position no fence spans. Each factor is rendered as the sequence
/// of tile starts, e.g. "FSS" for a filled fence at m = 3.
std::vector<std::string> metatile_factorize(const Tiling& t);

} // namespace fencetri
