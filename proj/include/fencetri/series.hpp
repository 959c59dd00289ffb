#pragma once

#include <string>
#include <vector>

#include "fencetri/bigint.hpp"
#include "fencetri/polynomial.hpp"

namespace fencetri {

/// Truncated formal power series with exact integer coefficients.
///
/// A series of order T stores the coefficients of x^0 .. x^T and nothing
/// beyond; every operation states how the truncation order of its result
/// is derived from its operands (binary operations take the minimum).
/// Values are immutable after construction.
class TruncatedSeries {
public:
    /// Coefficients c[0..T]; the order is coeffs.size() - 1 (so the vector
    /// must be non-empty).
    explicit TruncatedSeries(std::vector<Int> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries one(int order);
    /// The series x.
    static TruncatedSeries identity(int order);
    /// A polynomial viewed as a series of the given order (higher
    /// polynomial terms beyond the order are dropped).
    static TruncatedSeries from_poly(const IntPolynomial& p, int order);
    /// Expansion of num/den to the given order. Requires den(0) = +/-1 so
    /// that all coefficients stay integral.
    static TruncatedSeries ratio(const IntPolynomial& num, const IntPolynomial& den,
                                 int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^i for 0 <= i <= order(); throws std::out_of_range
    /// beyond the truncation order (those coefficients are unknown).
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient; order()+1 if all stored
    /// coefficients are zero.
    int valuation() const;

    /// Copy truncated to a smaller (or equal) order.
    TruncatedSeries truncated(int new_order) const;

    friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
    TruncatedSeries operator*(const Int& scalar) const;

    /// Multiplicative inverse. Requires a unit constant term (+1 or -1);
    /// anything else is a domain error naming the offending constant.
    TruncatedSeries reciprocal() const;

    /// Substitute `inner` for x. Requires inner to have zero constant
    /// term; the result carries min(order(), inner.order()).
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    /// Compositional inverse: the series s with this(s(x)) = s(this(x)) = x.
    /// Requires zero constant term and linear coefficient +1 or -1.
    /// Solved degree by degree, exactly.
    TruncatedSeries comp_inverse() const;

    bool operator==(const TruncatedSeries&) const = default;

    /// Debug form "c0 + c1*x + ... (+O(x^{T+1}))".
    std::string to_string() const;

private:
    std::vector<Int> c_;
};

/// Bivariate series g(x, y), stored as one y-polynomial per power of x.
/// All generating functions handled here are lower triangular: the row
/// for x^n has y-degree at most n.
class BivariateSeries {
public:
    explicit BivariateSeries(std::vector<IntPolynomial> rows);

    int order_x() const { return static_cast<int>(rows_.size()) - 1; }
    const IntPolynomial& row(int n) const;
    /// [x^n y^k]; throws std::out_of_range for n beyond order_x().
    Int coeff(int n, int k) const;

private:
    std::vector<IntPolynomial> rows_;
};

} // namespace fencetri
