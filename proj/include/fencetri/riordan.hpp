#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "fencetri/series.hpp"

namespace fencetri {

/// Riordan array (p, q): the infinite lower-triangular matrix whose
/// (n, k) entry is [x^n] p(x) * q(x)^k. Requires p with constant term
/// +/-1 and q with zero constant term and linear coefficient +/-1.
/// Entries are only available up to the truncation order of the backing
/// series; asking beyond raises order_error.
///
/// Thread-safe for concurrent entry() calls (the internal column cache
/// is filled under a mutex).
class RiordanArray {
public:
    RiordanArray(TruncatedSeries p, TruncatedSeries q);

    /// [x^n] p*q^k; zero for k > n.
    Int entry(long long n, long long k) const;

    /// Entry (n, n-k) of the direct array: rows reversed up to and
    /// including the main diagonal. Requires k <= n.
    Int row_reversed_entry(long long n, long long k) const;

    int order() const { return p_.order(); }
    const TruncatedSeries& p() const { return p_; }
    const TruncatedSeries& q() const { return q_; }

private:
    TruncatedSeries p_;
    TruncatedSeries q_;
    mutable std::mutex mu_;
    mutable std::vector<TruncatedSeries> columns_; // columns_[k] = p*q^k
};

enum class Family1Method { recurrence, riordan, closed };

/// The m-th Pascal-recurrence triangle: all ones on the left edge, the
/// right edge 1 when n is a multiple of m and 0 otherwise, and Pascal's
/// recurrence everywhere inside. Equals the row-reversed
/// (1/(1-x^m), x/(1-x)) Riordan array.
///
/// Rows are materialized lazily; the backing series rebuild themselves at
/// order max(2n, 64) whenever a deeper row is requested. Concurrent reads
/// are safe.
class Family1Triangle {
public:
    explicit Family1Triangle(int m);

    int modulus() const { return m_; }

    Int entry(long long n, long long k, Family1Method method = Family1Method::recurrence) const;
    std::vector<Int> row(long long n, Family1Method method = Family1Method::recurrence) const;

private:
    Int entry_recurrence(long long n, long long k) const;
    Int entry_riordan(long long n, long long k) const;
    Int entry_closed(long long n, long long k) const;
    void ensure_rows(long long n) const;
    const RiordanArray& array_for_order(long long n) const;

    int m_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Int>> rows_;
    mutable std::shared_ptr<const RiordanArray> array_;
};

/// One-shot entry accessor (builds a throwaway handle); prefer holding a
/// Family1Triangle when reading many entries.
Int family1_entry(int m, long long n, long long k,
                  Family1Method method = Family1Method::recurrence);

/// Backing Riordan array of the m-th triangle, p = 1/(1-x^m), q = x/(1-x),
/// at the given truncation order.
RiordanArray family1_array(int m, int order);

/// A-sequence of a Riordan array with column series q: the series A with
/// q(x) = x * A(q(x)), computed as x / q_inverse(x) where q_inverse is the
/// compositional inverse. The result carries order q.order() - 1.
TruncatedSeries a_sequence(const TruncatedSeries& q);

/// Generating function (1-x) / ((1-x^m)(1-2x)) for the row sums of the
/// m-th triangle, expanded to order T.
TruncatedSeries row_sum_series(int m, int T);

/// Generating function (1-x^2) / ((1-x^{2m})(1-x-x^2)) for the
/// antidiagonal sums of the m-th triangle, expanded to order T.
TruncatedSeries antidiag_sum_series(int m, int T);

/// Generating function 1 / ((1-x^m)(1-x)^k) of the k-th subdiagonal
/// (main diagonal = 0th); term i equals entry(i+k, i).
TruncatedSeries subdiag_series(int m, int k, int T);

enum class SumKind { row, antidiag };

/// First N+1 row-sum or antidiagonal-sum terms of the m-th triangle via
/// the order-(m+1) recurrences. Both published recurrence variants are
/// evaluated and must agree; a mismatch is a logic error.
std::vector<Int> sum_recurrences(int m, SumKind kind, int N);

/// Bivariate generating function g_m(x, y) of the m-th triangle,
/// satisfying [x^n y^k] g_m = entry(n, k), with rows up to x^order_x.
BivariateSeries bivariate_gf(int m, int order_x);

} // namespace fencetri
