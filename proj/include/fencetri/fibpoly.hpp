#pragma once

#include <vector>

#include "fencetri/polynomial.hpp"

namespace fencetri {

/// Fibonacci polynomial f_n, defined by f_n = f_{n-1} + x*f_{n-2} with
/// f_0 = f_1 = 1 and f_n = 0 for n < 0. The coefficient of x^k counts
/// the tilings of an n-board by squares and k dominoes, so
/// [x^k] f_n = C(n-k, k) and f_n(1) is the n-th Fibonacci number.
IntPolynomial fib_poly(long long n);

/// Fibonacci number with the f_0 = f_1 = 1 convention (A000045(n+1));
/// zero for n < 0.
Int fib_number(long long n);

/// f_j^{m-r} * f_{j+1}^r. Requires 0 <= r <= m-1.
IntPolynomial fib_product_power(long long j, int m, int r);

/// Coefficient of x^k in p; zero for k outside [0, deg p].
Int poly_coeff(const IntPolynomial& p, long long k);

/// A finite set of metatiles, each given by a size (board length or tile
/// count, depending on use) and the number of special tiles it contains.
struct PolySystem {
    struct Item {
        long long size;     // l_i (length) or p_i (tile count), >= 1
        long long specials; // s_i, 0 <= s_i <= size
    };
    std::vector<Item> items;
};

/// Generic metatile polynomial p_n = delta_{n,0} + sum_i x^{s_i} p_{n-l_i},
/// with p_n = 0 for n < 0. [x^k] p_n counts the size-n metatile sequences
/// containing k special tiles. The system must be finite and nonempty.
IntPolynomial metatile_poly(const PolySystem& system, long long n);

} // namespace fencetri
