#include "fencetri/subsets.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "fencetri/errors.hpp"
#include "fencetri/fibpoly.hpp"

namespace fencetri {

namespace {

constexpr int kSubsetGuard = 24;

void check_subset_params(int n, int m) {
    if (n < 0) throw std::domain_error("universe size n must be non-negative");
    if (m < 1) throw std::domain_error("forbidden difference m must be positive");
}

void check_guard(int n) {
    if (n > kSubsetGuard)
        throw guard_error("subset enumeration is limited to n <= " +
                          std::to_string(kSubsetGuard) + ", got " + std::to_string(n) +
                          "; use the tiling-triangle formula chb{n+m-k}{k}_m instead");
}

// Lexicographic depth-first enumeration. `chosen` is a bitmask over 1..n;
// adding e only needs the e-m membership test since smaller elements were
// all added earlier.
template <typename Visit>
void walk_subsets(int n, int m, int next, uint32_t chosen, std::vector<int>& acc,
                  const Visit& visit) {
    visit(acc);
    for (int e = next; e <= n; ++e) {
        if (e - m >= 1 && ((chosen >> (e - m)) & 1)) continue;
        acc.push_back(e);
        walk_subsets(n, m, e + 1, chosen | (uint32_t{1} << e), acc, visit);
        acc.pop_back();
    }
}

} // namespace

RestrictedSubset::RestrictedSubset(int n, int m, std::vector<int> elements)
    : n_(n), m_(m), elements_(std::move(elements)) {
    check_subset_params(n_, m_);
    for (size_t i = 0; i < elements_.size(); ++i) {
        int e = elements_[i];
        if (e < 1 || e > n_)
            throw std::invalid_argument("subset element " + std::to_string(e) +
                                        " outside universe {1.." + std::to_string(n_) + "}");
        if (i > 0 && elements_[i - 1] >= e)
            throw std::invalid_argument("subset elements must be strictly increasing");
    }
    for (size_t i = 0; i < elements_.size(); ++i)
        for (size_t l = i + 1; l < elements_.size(); ++l)
            if (elements_[l] - elements_[i] == m_)
                throw std::invalid_argument("subset elements " + std::to_string(elements_[i]) +
                                            " and " + std::to_string(elements_[l]) +
                                            " differ by the forbidden amount " +
                                            std::to_string(m_));
}

std::string RestrictedSubset::render() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) os << ",";
        os << elements_[i];
    }
    os << "}";
    return os.str();
}

Int count_restricted(int n, int m, int k) {
    check_subset_params(n, m);
    check_guard(n);
    if (k < 0) return 0;
    Int count = 0;
    std::vector<int> acc;
    walk_subsets(n, m, 1, 0, acc, [&](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) == k) count += 1;
    });
    return count;
}

std::vector<RestrictedSubset> enumerate_restricted(int n, int m, std::optional<int> k) {
    check_subset_params(n, m);
    check_guard(n);
    std::vector<RestrictedSubset> out;
    std::vector<int> acc;
    walk_subsets(n, m, 1, 0, acc, [&](const std::vector<int>& s) {
        if (!k || static_cast<int>(s.size()) == *k) out.emplace_back(n, m, s);
    });
    return out;
}

Int count_all_sizes(long long n, int m) {
    if (n < 0) throw std::domain_error("universe size n must be non-negative");
    if (m < 1) throw std::domain_error("forbidden difference m must be positive");
    long long j = n / m;
    int r = static_cast<int>(n % m);
    return int_pow(fib_number(j + 1), static_cast<unsigned long long>(m - r)) *
           int_pow(fib_number(j + 2), static_cast<unsigned long long>(r));
}

Tiling subset_to_tiling(const RestrictedSubset& s) {
    const int m = s.forbidden_difference();
    const int L = s.universe() + m;
    std::vector<Placement> tiles;
    std::vector<char> covered(static_cast<size_t>(L) + 1, 0);
    for (int e : s.elements()) {
        tiles.push_back({TileKind::fence, e});
        covered[static_cast<size_t>(e)] = 1;
        covered[static_cast<size_t>(e + m)] = 1;
    }
    for (int c = 1; c <= L; ++c)
        if (!covered[static_cast<size_t>(c)]) tiles.push_back({TileKind::square, c});
    return Tiling(L, m, std::move(tiles));
}

RestrictedSubset tiling_to_subset(const Tiling& t) {
    const int m = t.m();
    const int n = t.board_length() - m;
    if (n < 0)
        throw std::domain_error("tiling of a board shorter than m cannot encode a subset");
    std::vector<int> elements;
    for (const auto& p : t.placements())
        if (p.kind == TileKind::fence) elements.push_back(p.cell);
    return RestrictedSubset(n, m, std::move(elements));
}

} // namespace fencetri
