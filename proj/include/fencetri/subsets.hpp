#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fencetri/tiling.hpp"

namespace fencetri {

/// A k-subset of {1..n} in which no two elements differ by exactly m.
class RestrictedSubset {
public:
    RestrictedSubset(int n, int m, std::vector<int> elements);

    int universe() const { return n_; }
    int forbidden_difference() const { return m_; }
    const std::vector<int>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }

    /// "{1,3}"; "{}" when empty.
    std::string render() const;

    bool operator==(const RestrictedSubset&) const = default;

private:
    int n_, m_;
    std::vector<int> elements_; // strictly increasing
};

/// Number of k-subsets of {1..n} with no two elements differing by m,
/// counted by brute-force enumeration. Guarded at n <= 24; use the tiling
/// triangle identity S^(m)(n,k) = chb{n+m-k}{k}_m beyond that.
Int count_restricted(int n, int m, int k);

/// All restricted subsets of {1..n} in lexicographic order, optionally
/// only those of size k. Same n <= 24 guard.
std::vector<RestrictedSubset> enumerate_restricted(int n, int m, std::optional<int> k = {});

/// Number of restricted subsets of every size: with n = m*j + r
/// (0 <= r < m) this is f_{j+1}^{m-r} * f_{j+2}^r.
Int count_all_sizes(long long n, int m);

/// Bijection of a restricted subset with a tiling of an (n+m)-board:
/// element i becomes a fence whose left post occupies cell i, and the
/// remaining cells are filled with squares.
Tiling subset_to_tiling(const RestrictedSubset& s);

/// Inverse: read off the fence left-post cells of a tiling of an
/// (n+m)-board. The board must be at least m long.
RestrictedSubset tiling_to_subset(const Tiling& t);

} // namespace fencetri
