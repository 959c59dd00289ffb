#include "fencetri/riordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "fencetri/errors.hpp"

namespace fencetri {

namespace {

// 1 - x^k
IntPolynomial one_minus_pow(int k) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
    c[0] = 1;
    c[static_cast<size_t>(k)] = -1;
    return IntPolynomial(std::move(c));
}

void check_admissible_q(const TruncatedSeries& q) {
    if (q.coeff(0) != 0)
        throw std::domain_error("q must have zero constant term, got " + q.coeff(0).str());
    if (q.order() < 1 || (q.coeff(1) != 1 && q.coeff(1) != -1))
        throw std::domain_error("q must have linear coefficient +1 or -1");
}

} // namespace

RiordanArray::RiordanArray(TruncatedSeries p, TruncatedSeries q)
    : p_(std::move(p)), q_(std::move(q)) {
    if (p_.coeff(0) != 1 && p_.coeff(0) != -1)
        throw std::domain_error("Riordan array requires p with constant term +1 or -1, got " +
                                p_.coeff(0).str());
    check_admissible_q(q_);
    if (q_.order() != p_.order()) {
        int t = std::min(p_.order(), q_.order());
        p_ = p_.truncated(t);
        q_ = q_.truncated(t);
    }
    columns_.push_back(p_);
}

Int RiordanArray::entry(long long n, long long k) const {
    if (n < 0 || k < 0) throw std::domain_error("Riordan entry indices must be non-negative");
    if (k > n) return 0;
    if (n > order())
        throw order_error("Riordan entry (" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds series order " + std::to_string(order()) +
                          "; rebuild the array with a larger truncation order");
    std::scoped_lock lock(mu_);
    while (static_cast<long long>(columns_.size()) <= k)
        columns_.push_back(columns_.back() * q_);
    return columns_[static_cast<size_t>(k)].coeff(static_cast<int>(n));
}

Int RiordanArray::row_reversed_entry(long long n, long long k) const {
    if (k < 0 || k > n)
        throw std::domain_error("row-reversed entry requires 0 <= k <= n, got (n,k)=(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    return entry(n, n - k);
}

RiordanArray family1_array(int m, int order) {
    if (m < 1) throw std::domain_error("family1 modulus m must be positive");
    auto p = TruncatedSeries::ratio(IntPolynomial::constant(1), one_minus_pow(m), order);
    auto q = TruncatedSeries::ratio(IntPolynomial::monomial(1), one_minus_pow(1), order);
    return RiordanArray(std::move(p), std::move(q));
}

Family1Triangle::Family1Triangle(int m) : m_(m) {
    if (m < 1) throw std::domain_error("family1 modulus m must be positive");
}

void Family1Triangle::ensure_rows(long long n) const {
    // caller holds mu_
    if (rows_.empty()) rows_.push_back({Int(1)});
    while (static_cast<long long>(rows_.size()) <= n) {
        long long r = static_cast<long long>(rows_.size());
        const auto& prev = rows_.back();
        std::vector<Int> row(static_cast<size_t>(r) + 1);
        row[0] = 1;
        for (long long k = 1; k < r; ++k)
            row[static_cast<size_t>(k)] =
                prev[static_cast<size_t>(k)] + prev[static_cast<size_t>(k - 1)];
        row[static_cast<size_t>(r)] = (r % m_ == 0) ? 1 : 0;
        rows_.push_back(std::move(row));
    }
}

Int Family1Triangle::entry_recurrence(long long n, long long k) const {
    std::scoped_lock lock(mu_);
    ensure_rows(n);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const RiordanArray& Family1Triangle::array_for_order(long long n) const {
    // caller holds mu_
    if (!array_ || array_->order() < n) {
        int order = static_cast<int>(std::max<long long>(2 * n, 64));
        array_ = std::make_shared<const RiordanArray>(family1_array(m_, order));
    }
    return *array_;
}

Int Family1Triangle::entry_riordan(long long n, long long k) const {
    std::shared_ptr<const RiordanArray> arr;
    {
        std::scoped_lock lock(mu_);
        array_for_order(n);
        arr = array_;
    }
    return arr->row_reversed_entry(n, k);
}

Int Family1Triangle::entry_closed(long long n, long long k) const {
    if (k == n) return (n % m_ == 0) ? 1 : 0;
    Int acc = 0;
    for (long long j = 0; m_ * j <= k; ++j) acc += binomial(n - m_ * j - 1, n - k - 1);
    return acc;
}

Int Family1Triangle::entry(long long n, long long k, Family1Method method) const {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("family1 entry requires 0 <= k <= n, got (n,k)=(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    switch (method) {
        case Family1Method::recurrence: return entry_recurrence(n, k);
        case Family1Method::riordan: return entry_riordan(n, k);
        case Family1Method::closed: return entry_closed(n, k);
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> Family1Triangle::row(long long n, Family1Method method) const {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) out.push_back(entry(n, k, method));
    return out;
}

Int family1_entry(int m, long long n, long long k, Family1Method method) {
    return Family1Triangle(m).entry(n, k, method);
}

TruncatedSeries a_sequence(const TruncatedSeries& q) {
    check_admissible_q(q);
    TruncatedSeries qbar = q.comp_inverse();
    // A = x / qbar: divide by x by dropping the zero constant term.
    std::vector<Int> shifted(qbar.coeffs().begin() + 1, qbar.coeffs().end());
    return TruncatedSeries(std::move(shifted)).reciprocal();
}

TruncatedSeries row_sum_series(int m, int T) {
    if (m < 1) throw std::domain_error("row_sum_series: m must be positive");
    IntPolynomial den = one_minus_pow(m) * IntPolynomial({{1, -2}});
    return TruncatedSeries::ratio(one_minus_pow(1), den, T);
}

TruncatedSeries antidiag_sum_series(int m, int T) {
    if (m < 1) throw std::domain_error("antidiag_sum_series: m must be positive");
    IntPolynomial den = one_minus_pow(2 * m) * IntPolynomial({{1, -1, -1}});
    return TruncatedSeries::ratio(one_minus_pow(2), den, T);
}

TruncatedSeries subdiag_series(int m, int k, int T) {
    if (m < 1) throw std::domain_error("subdiag_series: m must be positive");
    if (k < 0) throw std::domain_error("subdiag_series: k must be non-negative");
    IntPolynomial den = one_minus_pow(m) * one_minus_pow(1).pow(static_cast<unsigned>(k));
    return TruncatedSeries::ratio(IntPolynomial::constant(1), den, T);
}

namespace {

Int at(const std::vector<Int>& v, long long i) {
    return (i < 0 || i >= static_cast<long long>(v.size())) ? Int(0) : v[static_cast<size_t>(i)];
}

} // namespace

std::vector<Int> sum_recurrences(int m, SumKind kind, int N) {
    if (m < 1) throw std::domain_error("sum_recurrences: m must be positive");
    if (N < 0) throw std::domain_error("sum_recurrences: N must be non-negative");
    std::vector<Int> a, b; // the two published recurrence variants
    a.reserve(static_cast<size_t>(N) + 1);
    b.reserve(static_cast<size_t>(N) + 1);
    for (long long n = 0; n <= N; ++n) {
        Int va, vb;
        if (kind == SumKind::row) {
            // r_n = 2r_{n-1} + r_{n-m} - 2r_{n-m-1} + d_{n,0} - d_{n,1}
            va = 2 * at(a, n - 1) + at(a, n - m) - 2 * at(a, n - m - 1) + (n == 0 ? 1 : 0) -
                 (n == 1 ? 1 : 0);
            // r_n = r_{n-1} + ... + r_{n-m+1} + 2r_{n-m} + d_{n,0}
            vb = 2 * at(b, n - m) + (n == 0 ? 1 : 0);
            for (int i = 1; i <= m - 1; ++i) vb += at(b, n - i);
        } else {
            // a_n = a_{n-1} + a_{n-2} + a_{n-2m} - a_{n-2m-1} - a_{n-2m-2}
            //       + d_{n,0} - d_{n,2}
            va = at(a, n - 1) + at(a, n - 2) + at(a, n - 2 * m) - at(a, n - 2 * m - 1) -
                 at(a, n - 2 * m - 2) + (n == 0 ? 1 : 0) - (n == 2 ? 1 : 0);
            // a_n = a_{n-1} + a_{n-3} + ... + a_{n-2m+1} + a_{n-2m} + d_{n,0}
            vb = at(b, n - 2 * m) + (n == 0 ? 1 : 0);
            for (int i = 1; i <= 2 * m - 1; i += 2) vb += at(b, n - i);
        }
        if (va != vb)
            throw std::logic_error("sum_recurrences: the two recurrence variants disagree at n=" +
                                   std::to_string(n));
        a.push_back(std::move(va));
        b.push_back(std::move(vb));
    }
    return a;
}

BivariateSeries bivariate_gf(int m, int order_x) {
    if (m < 1) throw std::domain_error("bivariate_gf: m must be positive");
    if (order_x < 0) throw std::domain_error("bivariate_gf: order_x must be non-negative");
    // g_m(x,y) = (1 - xy) / ((1 - (xy)^m)(1 - x - xy)); solve g*D = N row by
    // row in x, where each row is a polynomial in y and D has constant row 1.
    // D = 1 - x - xy - x^m y^m + x^{m+1} y^m + x^{m+1} y^{m+1}.
    std::vector<IntPolynomial> den(static_cast<size_t>(m) + 2);
    den[0] = IntPolynomial::constant(1);
    den[1] = IntPolynomial({{-1, -1}});
    den[static_cast<size_t>(m)] += IntPolynomial::monomial(m, -1);
    den[static_cast<size_t>(m) + 1] += IntPolynomial::monomial(m) + IntPolynomial::monomial(m + 1);

    std::vector<IntPolynomial> num(2);
    num[0] = IntPolynomial::constant(1);
    num[1] = IntPolynomial::monomial(1, -1);

    std::vector<IntPolynomial> rows(static_cast<size_t>(order_x) + 1);
    for (int n = 0; n <= order_x; ++n) {
        IntPolynomial acc = n < static_cast<int>(num.size()) ? num[static_cast<size_t>(n)]
                                                             : IntPolynomial{};
        for (int i = 1; i <= n && i < static_cast<int>(den.size()); ++i)
            acc -= den[static_cast<size_t>(i)] * rows[static_cast<size_t>(n - i)];
        rows[static_cast<size_t>(n)] = std::move(acc);
    }
    return BivariateSeries(std::move(rows));
}

} // namespace fencetri
