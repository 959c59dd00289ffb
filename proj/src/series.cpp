#include "fencetri/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fencetri {

TruncatedSeries::TruncatedSeries(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return TruncatedSeries(std::vector<Int>(static_cast<size_t>(order) + 1, 0));
}

TruncatedSeries TruncatedSeries::one(int order) {
    auto s = zero(order);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    auto s = zero(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const IntPolynomial& p, int order) {
    auto s = zero(order);
    int top = std::min(order, p.degree());
    for (int i = 0; i <= top; ++i) s.c_[static_cast<size_t>(i)] = p.coeff(i);
    return s;
}

TruncatedSeries TruncatedSeries::ratio(const IntPolynomial& num, const IntPolynomial& den,
                                       int order) {
    return from_poly(num, order) * from_poly(den, order).reciprocal();
}

const Int& TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order())
        throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(i) +
                                " outside truncation order " + std::to_string(order()));
    return c_[static_cast<size_t>(i)];
}

int TruncatedSeries::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return order() + 1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("TruncatedSeries: truncated() order out of range");
    return TruncatedSeries(std::vector<Int>(c_.begin(), c_.begin() + new_order + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int t = std::min(a.order(), b.order());
    std::vector<Int> out(static_cast<size_t>(t) + 1);
    for (int i = 0; i <= t; ++i) out[static_cast<size_t>(i)] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int t = std::min(a.order(), b.order());
    std::vector<Int> out(static_cast<size_t>(t) + 1);
    for (int i = 0; i <= t; ++i) out[static_cast<size_t>(i)] = a.c_[i] - b.c_[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int t = std::min(a.order(), b.order());
    std::vector<Int> out(static_cast<size_t>(t) + 1, 0);
    for (int i = 0; i <= t; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= t; ++j)
            out[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator*(const Int& scalar) const {
    std::vector<Int> out = c_;
    for (auto& v : out) v *= scalar;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    const Int& a0 = c_[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series reciprocal requires constant term +1 or -1, got " +
                                a0.str());
    // With a0 = +/-1, 1/a0 = a0 and all recurrence steps stay integral.
    std::vector<Int> b(c_.size(), 0);
    b[0] = a0;
    for (size_t n = 1; n < c_.size(); ++n) {
        Int acc = 0;
        for (size_t i = 1; i <= n; ++i) acc += c_[i] * b[n - i];
        b[n] = -a0 * acc;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    if (inner.c_[0] != 0)
        throw std::domain_error("series composition requires zero constant term in inner, got " +
                                inner.c_[0].str());
    int t = std::min(order(), inner.order());
    TruncatedSeries acc = zero(t);
    TruncatedSeries power = one(t);
    TruncatedSeries in = inner.truncated(t);
    for (int k = 0; k <= t; ++k) {
        if (c_[static_cast<size_t>(k)] != 0) acc = acc + power * c_[static_cast<size_t>(k)];
        if (k < t) {
            power = power * in;
            if (power.valuation() > t) break; // all later terms vanish below the order
        }
    }
    return acc;
}

TruncatedSeries TruncatedSeries::comp_inverse() const {
    if (c_[0] != 0)
        throw std::domain_error("compositional inverse requires zero constant term, got " +
                                c_[0].str());
    if (order() < 1 || (c_[1] != 1 && c_[1] != -1))
        throw std::domain_error("compositional inverse requires linear coefficient +1 or -1");
    const Int q1 = c_[1];
    int t = order();
    std::vector<Int> s(static_cast<size_t>(t) + 1, 0);
    if (t >= 1) s[1] = q1;
    // Solve q(s(x)) = x degree by degree: with s known below degree n and
    // s_n = 0, the residual coefficient e at x^n satisfies q1*s_n + e = 0.
    for (int n = 2; n <= t; ++n) {
        TruncatedSeries partial(std::vector<Int>(s.begin(), s.begin() + n + 1));
        Int e = truncated(n).compose(partial).coeff(n);
        s[static_cast<size_t>(n)] = -q1 * e;
    }
    return TruncatedSeries(std::move(s));
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    os << IntPolynomial(c_).to_string();
    os << " (+O(x^" << order() + 1 << "))";
    return os.str();
}

BivariateSeries::BivariateSeries(std::vector<IntPolynomial> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("BivariateSeries: no rows");
}

const IntPolynomial& BivariateSeries::row(int n) const {
    if (n < 0 || n > order_x())
        throw std::out_of_range("BivariateSeries: row " + std::to_string(n) +
                                " outside order " + std::to_string(order_x()));
    return rows_[static_cast<size_t>(n)];
}

Int BivariateSeries::coeff(int n, int k) const { return row(n).coeff(k); }

} // namespace fencetri
