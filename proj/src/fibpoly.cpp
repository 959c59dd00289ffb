#include "fencetri/fibpoly.hpp"

#include <mutex>
#include <stdexcept>

namespace fencetri {

namespace {
std::mutex fib_mu;
std::vector<IntPolynomial> fib_cache; // fib_cache[n] = f_n
} // namespace

IntPolynomial fib_poly(long long n) {
    if (n < 0) return IntPolynomial{};
    std::scoped_lock lock(fib_mu);
    if (fib_cache.empty()) {
        fib_cache.push_back(IntPolynomial::constant(1)); // f_0
        fib_cache.push_back(IntPolynomial::constant(1)); // f_1
    }
    const IntPolynomial x = IntPolynomial::monomial(1);
    while (static_cast<long long>(fib_cache.size()) <= n) {
        size_t s = fib_cache.size();
        fib_cache.push_back(fib_cache[s - 1] + x * fib_cache[s - 2]);
    }
    return fib_cache[static_cast<size_t>(n)];
}

Int fib_number(long long n) {
    if (n < 0) return 0;
    Int a = 1, b = 1; // f_0, f_1
    for (long long i = 0; i < n; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

IntPolynomial fib_product_power(long long j, int m, int r) {
    if (m < 1) throw std::domain_error("fib_product_power: m must be positive");
    if (r < 0 || r >= m)
        throw std::domain_error("fib_product_power: r must satisfy 0 <= r <= m-1, got r=" +
                                std::to_string(r) + ", m=" + std::to_string(m));
    return fib_poly(j).pow(static_cast<unsigned>(m - r)) *
           fib_poly(j + 1).pow(static_cast<unsigned>(r));
}

Int poly_coeff(const IntPolynomial& p, long long k) {
    if (k < 0 || k > p.degree()) return 0;
    return p.coeff(static_cast<int>(k));
}

IntPolynomial metatile_poly(const PolySystem& system, long long n) {
    if (system.items.empty())
        throw std::domain_error("metatile_poly: system must be nonempty");
    for (const auto& it : system.items) {
        if (it.size < 1) throw std::domain_error("metatile_poly: metatile size must be >= 1");
        if (it.specials < 0 || it.specials > it.size)
            throw std::domain_error("metatile_poly: specials must lie in [0, size]");
    }
    if (n < 0) return IntPolynomial{};
    std::vector<IntPolynomial> p(static_cast<size_t>(n) + 1);
    p[0] = IntPolynomial::constant(1);
    for (long long i = 1; i <= n; ++i) {
        IntPolynomial acc;
        for (const auto& it : system.items) {
            if (it.size > i) continue;
            acc += p[static_cast<size_t>(i - it.size)].shifted(static_cast<int>(it.specials));
        }
        p[static_cast<size_t>(i)] = acc;
    }
    return p[static_cast<size_t>(n)];
}

} // namespace fencetri
