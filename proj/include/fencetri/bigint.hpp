#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fencetri {

using Int = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k), with C(n, k) = 0 whenever k < 0, n < 0,
/// or k > n. The zero convention outside the usual range is relied on by
/// closed-form triangle entries.
Int binomial(long long n, long long k);

/// x^e for a non-negative exponent.
Int int_pow(const Int& x, unsigned long long e);

} // namespace fencetri
