#include "fencetri/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "fencetri/errors.hpp"
#include "fencetri/fibpoly.hpp"

namespace fencetri {

namespace {

constexpr int kEnumerationGuard = 30;

void check_board_params(int L, int m) {
    if (L < 0) throw std::domain_error("board length must be non-negative");
    if (m < 1) throw std::domain_error("fence parameter m must be positive");
}

// Depth-first walk over every tiling of an L-board, square branch first.
// visit receives the placements sorted by start cell.
void walk_tilings(int L, int m, std::vector<Placement>& acc, uint64_t covered,
                  int from_cell, const std::function<void(const std::vector<Placement>&)>& visit) {
    int c = from_cell;
    while (c <= L && (covered >> c) & 1) ++c;
    if (c > L) {
        visit(acc);
        return;
    }
    acc.push_back({TileKind::square, c});
    walk_tilings(L, m, acc, covered | (uint64_t{1} << c), c + 1, visit);
    acc.pop_back();
    if (c + m <= L && !((covered >> (c + m)) & 1)) {
        acc.push_back({TileKind::fence, c});
        walk_tilings(L, m, acc, covered | (uint64_t{1} << c) | (uint64_t{1} << (c + m)), c + 1,
                     visit);
        acc.pop_back();
    }
}

void for_each_tiling(int L, int m, const std::function<void(const std::vector<Placement>&)>& visit) {
    check_board_params(L, m);
    if (L > kEnumerationGuard)
        throw guard_error("tiling enumeration is limited to boards of length <= " +
                          std::to_string(kEnumerationGuard) + ", got " + std::to_string(L) +
                          "; use the DP counter for longer boards");
    std::vector<Placement> acc;
    walk_tilings(L, m, acc, 0, 1, visit);
}

} // namespace

Tiling::Tiling(int board_length, int m, std::vector<Placement> tiles)
    : length_(board_length), m_(m), tiles_(std::move(tiles)) {
    check_board_params(length_, m_);
    std::sort(tiles_.begin(), tiles_.end(),
              [](const Placement& a, const Placement& b) { return a.cell < b.cell; });
    std::vector<char> covered(static_cast<size_t>(length_) + 1, 0);
    auto cover = [&](int cell) {
        if (cell < 1 || cell > length_)
            throw std::invalid_argument("tiling covers cell " + std::to_string(cell) +
                                        " outside the board of length " + std::to_string(length_));
        if (covered[static_cast<size_t>(cell)])
            throw std::invalid_argument("tiling covers cell " + std::to_string(cell) + " twice");
        covered[static_cast<size_t>(cell)] = 1;
    };
    for (const auto& t : tiles_) {
        cover(t.cell);
        if (t.kind == TileKind::fence) cover(t.cell + m_);
    }
    for (int c = 1; c <= length_; ++c)
        if (!covered[static_cast<size_t>(c)])
            throw std::invalid_argument("tiling leaves cell " + std::to_string(c) + " uncovered");
}

int Tiling::fence_count() const {
    return static_cast<int>(
        std::count_if(tiles_.begin(), tiles_.end(),
                      [](const Placement& p) { return p.kind == TileKind::fence; }));
}

std::string Tiling::render() const {
    if (tiles_.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : tiles_) {
        if (!first) os << " ";
        first = false;
        if (t.kind == TileKind::square)
            os << "S";
        else
            os << "F(" << t.cell << ")";
    }
    return os.str();
}

std::vector<Tiling> enumerate_tilings(int L, int m) {
    std::vector<Tiling> out;
    for_each_tiling(L, m, [&](const std::vector<Placement>& tiles) {
        out.emplace_back(L, m, tiles);
    });
    return out;
}

std::map<int, Int> count_by_fences(int L, int m) {
    std::map<int, Int> counts;
    for_each_tiling(L, m, [&](const std::vector<Placement>& tiles) {
        int k = static_cast<int>(
            std::count_if(tiles.begin(), tiles.end(),
                          [](const Placement& p) { return p.kind == TileKind::fence; }));
        counts[k] += 1;
    });
    return counts;
}

std::map<int, Int> count_by_fences_dp(int L, int m) {
    check_board_params(L, m);
    if (m > 30) throw std::domain_error("count_by_fences_dp: m too large for mask DP");
    // State while sweeping cells left to right: bit t of the mask says
    // cell (current + t) is already covered by the right post of an
    // earlier fence. Values are per-fence-count tallies.
    const uint32_t nmask = uint32_t{1} << m;
    const int maxk = L / 2 + 1;
    using Table = std::vector<std::vector<Int>>; // [mask][k]
    Table cur(nmask, std::vector<Int>(static_cast<size_t>(maxk) + 1, 0));
    cur[0][0] = 1;
    for (int cell = 1; cell <= L; ++cell) {
        Table next(nmask, std::vector<Int>(static_cast<size_t>(maxk) + 1, 0));
        for (uint32_t mask = 0; mask < nmask; ++mask) {
            for (int k = 0; k <= maxk; ++k) {
                const Int& v = cur[mask][static_cast<size_t>(k)];
                if (v == 0) continue;
                if (mask & 1) { // covered by an earlier right post
                    next[mask >> 1][static_cast<size_t>(k)] += v;
                    continue;
                }
                next[mask >> 1][static_cast<size_t>(k)] += v; // square
                if (cell + m <= L && k < maxk)                 // fence
                    next[(mask >> 1) | (uint32_t{1} << (m - 1))][static_cast<size_t>(k + 1)] += v;
            }
        }
        cur = std::move(next);
    }
    std::map<int, Int> counts;
    for (int k = 0; k <= maxk; ++k)
        if (cur[0][static_cast<size_t>(k)] != 0) counts[k] = cur[0][static_cast<size_t>(k)];
    return counts;
}

Family2Triangle::Family2Triangle(int m) : m_(m) {
    if (m < 1) throw std::domain_error("family2 modulus m must be positive");
}

// The three memo-backed helpers assume mu_ is already held by entry().

Int Family2Triangle::entry_poly(long long n, long long k) const {
    while (static_cast<long long>(poly_rows_.size()) <= n) {
        long long r = static_cast<long long>(poly_rows_.size());
        std::vector<Int> row(static_cast<size_t>(r) + 1);
        for (long long kk = 0; kk <= r; ++kk) {
            long long total = r + kk;
            long long j = total / m_;
            int rem = static_cast<int>(total % m_);
            row[static_cast<size_t>(kk)] = poly_coeff(fib_product_power(j, m_, rem), kk);
        }
        poly_rows_.push_back(std::move(row));
    }
    return poly_rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int Family2Triangle::entry_recurrence3(long long n, long long k) const {
    auto at = [&](long long nn, long long kk) -> Int {
        if (nn < 0 || kk < 0 || kk > nn) return 0;
        return rec3_rows_[static_cast<size_t>(nn)][static_cast<size_t>(kk)];
    };
    while (static_cast<long long>(rec3_rows_.size()) <= n) {
        long long r = static_cast<long long>(rec3_rows_.size());
        rec3_rows_.emplace_back(static_cast<size_t>(r) + 1);
        for (long long kk = 0; kk <= r; ++kk) {
            Int v = 0;
            if (r == 0 && kk == 0) v += 1;
            if (r == 1 && kk == 1) v -= 1;
            v += at(r - 1, kk) + at(r - 1, kk - 1) - at(r - 2, kk - 1);
            v += at(r - 3, kk - 1) + at(r - 3, kk - 2) + at(r - 3, kk - 3);
            v -= at(r - 4, kk - 3) + at(r - 4, kk - 4);
            rec3_rows_.back()[static_cast<size_t>(kk)] = std::move(v);
        }
    }
    return rec3_rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Int Family2Triangle::entry_pascal_region(long long n, long long k) const {
    // Pascal's recurrence is proven on n >= 2k+1 for m = 3; outside that
    // region fall back to the polynomial route.
    if (k < 0) return 0;
    if (n < 2 * k + 1) return entry_poly(n, k);
    auto key = std::make_pair(n, k);
    auto it = pr_memo_.find(key);
    if (it != pr_memo_.end()) return it->second;
    Int v = entry_pascal_region(n - 1, k) + entry_pascal_region(n - 1, k - 1);
    pr_memo_.emplace(key, v);
    return v;
}

Int Family2Triangle::entry(long long n, long long k, Family2Method method) const {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("family2 entry requires 0 <= k <= n, got (n,k)=(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    switch (method) {
        case Family2Method::poly: {
            std::scoped_lock lock(mu_);
            return entry_poly(n, k);
        }
        case Family2Method::oracle: {
            long long board = n + k;
            if (board > kEnumerationGuard)
                throw guard_error("oracle method needs board length n+k <= " +
                                  std::to_string(kEnumerationGuard) + ", got " +
                                  std::to_string(board));
            auto counts = count_by_fences(static_cast<int>(board), m_);
            auto it = counts.find(static_cast<int>(k));
            return it == counts.end() ? Int(0) : it->second;
        }
        case Family2Method::recurrence3: {
            if (m_ != 3)
                throw std::invalid_argument(
                    "method recurrence3 is only supported for m=3 triangles");
            std::scoped_lock lock(mu_);
            return entry_recurrence3(n, k);
        }
        case Family2Method::pascal_region: {
            if (m_ != 3)
                throw std::invalid_argument(
                    "method pascal_region is only supported for m=3 triangles");
            std::scoped_lock lock(mu_);
            return entry_pascal_region(n, k);
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> Family2Triangle::row(long long n, Family2Method method) const {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) out.push_back(entry(n, k, method));
    return out;
}

Int family2_entry(int m, long long n, long long k, Family2Method method) {
    return Family2Triangle(m).entry(n, k, method);
}

Int total_tilings(int m, long long n) {
    Family2Triangle tri(m);
    Int acc = 0;
    for (long long k = 0; k <= n; ++k) acc += tri.entry(n, k);
    return acc;
}

std::vector<Int> b3_totals(int N) {
    if (N < 0) throw std::domain_error("b3_totals: N must be non-negative");
    std::vector<Int> b;
    b.reserve(static_cast<size_t>(N) + 1);
    auto at = [&](long long i) -> Int {
        return (i < 0 || i >= static_cast<long long>(b.size())) ? Int(0)
                                                                : b[static_cast<size_t>(i)];
    };
    for (long long n = 0; n <= N; ++n) {
        Int v = (n == 0 ? 1 : 0) - (n == 1 ? 1 : 0) + 2 * at(n - 1) - at(n - 2) + 3 * at(n - 3) -
                2 * at(n - 4);
        b.push_back(std::move(v));
    }
    return b;
}

TupleTiling::TupleTiling(int m, int j, int r, std::vector<Tiling> boards)
    : m_(m), j_(j), r_(r), boards_(std::move(boards)) {
    if (m_ < 1) throw std::invalid_argument("TupleTiling: m must be positive");
    if (j_ < 0 || r_ < 0 || r_ >= m_)
        throw std::invalid_argument("TupleTiling: need j >= 0 and 0 <= r < m");
    if (static_cast<int>(boards_.size()) != m_)
        throw std::invalid_argument("TupleTiling: expected " + std::to_string(m_) + " boards, got " +
                                    std::to_string(boards_.size()));
    for (int b = 0; b < m_; ++b) {
        int want = b < r_ ? j_ + 1 : j_;
        if (boards_[static_cast<size_t>(b)].board_length() != want)
            throw std::invalid_argument("TupleTiling: board " + std::to_string(b + 1) +
                                        " must have length " + std::to_string(want));
        if (boards_[static_cast<size_t>(b)].m() != 1)
            throw std::invalid_argument("TupleTiling: sub-boards must be square-and-domino "
                                        "tilings (m = 1)");
    }
}

int TupleTiling::fence_count() const {
    int acc = 0;
    for (const auto& b : boards_) acc += b.fence_count();
    return acc;
}

int TupleTiling::tile_count() const {
    int acc = 0;
    for (const auto& b : boards_) acc += b.tile_count();
    return acc;
}

TupleTiling bij_to_tuple(const Tiling& t) {
    const int m = t.m();
    const int L = t.board_length();
    const int j = L / m;
    const int r = L % m;
    std::vector<std::vector<Placement>> per_board(static_cast<size_t>(m));
    for (const auto& p : t.placements()) {
        int board = (p.cell - 1) % m;            // 0-based
        int pos = (p.cell - 1) / m + 1;          // ceil(cell / m)
        per_board[static_cast<size_t>(board)].push_back({p.kind, pos});
    }
    std::vector<Tiling> boards;
    boards.reserve(static_cast<size_t>(m));
    for (int b = 0; b < m; ++b) {
        int len = b < r ? j + 1 : j;
        boards.emplace_back(len, 1, std::move(per_board[static_cast<size_t>(b)]));
    }
    return TupleTiling(m, j, r, std::move(boards));
}

Tiling bij_from_tuple(const TupleTiling& tt) {
    const int m = tt.m();
    const int L = m * tt.j() + tt.r();
    std::vector<Placement> tiles;
    for (int b = 0; b < m; ++b) {
        for (const auto& p : tt.boards()[static_cast<size_t>(b)].placements()) {
            int cell = (p.cell - 1) * m + b + 1;
            tiles.push_back({p.kind, cell});
        }
    }
    return Tiling(L, m, std::move(tiles));
}

std::vector<std::string> metatile_factorize(const Tiling& t) {
    const int L = t.board_length();
    const int m = t.m();
    if (L == 0) return {};
    // spanned[c] = a fence crosses the gap between cells c and c+1.
    std::vector<char> spanned(static_cast<size_t>(L) + 1, 0);
    for (const auto& p : t.placements()) {
        if (p.kind != TileKind::fence) continue;
        for (int c = p.cell; c < p.cell + m && c < L; ++c) spanned[static_cast<size_t>(c)] = 1;
    }
    std::vector<std::string> factors;
    std::string cur;
    size_t idx = 0;
    const auto& tiles = t.placements();
    for (int c = 1; c <= L; ++c) {
        while (idx < tiles.size() && tiles[idx].cell == c) {
            cur += tiles[idx].kind == TileKind::square ? 'S' : 'F';
            ++idx;
        }
        if (!spanned[static_cast<size_t>(c)]) {
            factors.push_back(cur);
            cur.clear();
        }
    }
    return factors;
}

} // namespace fencetri
