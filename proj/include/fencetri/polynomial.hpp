#pragma once

#include <string>
#include <vector>

#include "fencetri/bigint.hpp"

namespace fencetri {

/// Dense polynomial with arbitrary-precision integer coefficients.
/// The coefficient vector never carries trailing zeros; the zero
/// polynomial is represented by an empty vector and has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c);
    /// c * x^k
    static IntPolynomial monomial(int k, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^k; zero outside [0, degree()].
    Int coeff(int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Evaluate at an integer point (Horner).
    Int operator()(const Int& x) const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);

    IntPolynomial pow(unsigned e) const;

    /// Multiply by x^k (k >= 0).
    IntPolynomial shifted(int k) const;

    bool operator==(const IntPolynomial&) const = default;

    /// Human-readable form, e.g. "1 + 3*x + x^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

} // namespace fencetri
