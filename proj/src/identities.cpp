#include "fencetri/identities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fencetri/errors.hpp"
#include "fencetri/fibpoly.hpp"
#include "fencetri/riordan.hpp"
#include "fencetri/subsets.hpp"
#include "fencetri/tiling.hpp"

namespace fencetri {

namespace {

using nlohmann::json;

json cx(std::initializer_list<std::pair<const char*, long long>> params, const Int& lhs,
        const Int& rhs) {
    json out;
    for (const auto& [k, v] : params) out[k] = v;
    out["lhs"] = lhs.str();
    out["rhs"] = rhs.str();
    return out;
}

using CheckResult = std::optional<json>;
using CheckFn = std::function<CheckResult(const Bounds&)>;

// --- individual checks, each returning the first (lexicographically
// --- smallest) counterexample or nullopt -------------------------------

CheckResult check_ch_eq_chb(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int L = 0; L <= b.n_max; ++L) {
            auto counts = count_by_fences_dp(L, m);
            for (int k = 0; 2 * k <= L; ++k) {
                Int lhs = counts.count(k) ? counts[k] : Int(0);
                Int rhs = tri.entry(L - k, k);
                if (lhs != rhs) return cx({{"m", m}, {"n", L}, {"k", k}}, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_adiag_sum(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int j = 0; j <= b.j_max; ++j) {
            for (int r = 0; r < m; ++r) {
                long long N = static_cast<long long>(m) * j + r;
                if (N > b.n_max) continue;
                Int lhs = 0;
                for (long long k = 0; 2 * k <= N; ++k) lhs += tri.entry(N - k, k);
                Int rhs = int_pow(fib_number(j), static_cast<unsigned long long>(m - r)) *
                          int_pow(fib_number(j + 1), static_cast<unsigned long long>(r));
                if (lhs != rhs)
                    return cx({{"m", m}, {"j", j}, {"r", r}}, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_col0(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int n = 0; n <= b.n_max; ++n) {
            Int lhs = tri.entry(n, 0);
            if (lhs != 1) return cx({{"m", m}, {"n", n}}, lhs, Int(1));
        }
    }
    return std::nullopt;
}

CheckResult check_col1(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int n = 1; n <= b.n_max; ++n) {
            Int lhs = tri.entry(n, 1);
            Int rhs = n < m ? Int(0) : Int(n - m + 1);
            if (lhs != rhs) return cx({{"m", m}, {"n", n}}, lhs, rhs);
        }
    }
    return std::nullopt;
}

CheckResult check_diag(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int n = 0; n <= b.n_max; ++n) {
            Int lhs = tri.entry(n, n);
            Int rhs = n % m == 0 ? 1 : 0;
            if (lhs != rhs) return cx({{"m", m}, {"n", n}}, lhs, rhs);
        }
    }
    return std::nullopt;
}

CheckResult check_zeros(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int j = 1; j <= b.j_max; ++j) {
            for (int p = 1; p <= m - 1; ++p) {
                for (int r = 1; r <= p; ++r) {
                    long long n = static_cast<long long>(m) * j - r;
                    long long k = static_cast<long long>(m) * j - p;
                    if (n > b.n_max || n < 0) continue;
                    Int lhs = tri.entry(n, k);
                    if (lhs != 0)
                        return cx({{"m", m}, {"j", j}, {"p", p}, {"r", r}}, lhs, Int(0));
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_jp_boundary(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int j = 1; j <= b.j_max; ++j) {
            for (int p = 0; p <= m; ++p) {
                Int want = int_pow(Int(j), static_cast<unsigned long long>(p));
                long long n1 = static_cast<long long>(m) * (j - 1) + p;
                if (n1 <= b.n_max) {
                    Int lhs = tri.entry(n1, static_cast<long long>(m) * (j - 1));
                    if (lhs != want) return cx({{"m", m}, {"j", j}, {"p", p}}, lhs, want);
                }
                long long n2 = static_cast<long long>(m) * j;
                if (n2 <= b.n_max) {
                    Int lhs = tri.entry(n2, n2 - p);
                    if (lhs != want) return cx({{"m", m}, {"j", j}, {"p", p}}, lhs, want);
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_mTj(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int j = 1; j <= b.j_max; ++j) {
            long long n = static_cast<long long>(m) * j + 1;
            if (n > b.n_max) continue;
            Int lhs = tri.entry(n, n - 2);
            Int rhs = Int(m) * j * (j + 1) / 2;
            if (lhs != rhs) return cx({{"m", m}, {"j", j}}, lhs, rhs);
        }
    }
    return std::nullopt;
}

CheckResult check_four_squares(const Bounds& b) {
    for (int m = std::max(2, b.m_min); m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int j = 1; j <= b.j_max; ++j) {
            long long n = static_cast<long long>(m) * j + 2;
            if (n > b.n_max) continue;
            Int lhs = tri.entry(n, n - 4);
            Int rhs = Int(m) * binomial(j + 2, 4) * (j > 1 ? 1 : 0) +
                      binomial(m, 2) * binomial(j + 1, 2) * binomial(j + 1, 2);
            if (lhs != rhs) return cx({{"m", m}, {"j", j}}, lhs, rhs);
        }
    }
    return std::nullopt;
}

CheckResult check_B3(const Bounds& b) {
    Family2Triangle tri(3);
    auto totals = b3_totals(b.n_max);
    for (int n = 0; n <= b.n_max; ++n) {
        Int direct = 0;
        for (long long k = 0; k <= n; ++k) direct += tri.entry(n, k);
        if (totals[static_cast<size_t>(n)] != direct)
            return cx({{"n", n}}, totals[static_cast<size_t>(n)], direct);
    }
    return std::nullopt;
}

CheckResult check_rr3(const Bounds& b) {
    Family2Triangle tri(3);
    for (int n = 0; n <= b.n_max; ++n) {
        for (long long k = 0; k <= n; ++k) {
            Int lhs = tri.entry(n, k, Family2Method::recurrence3);
            Int rhs = tri.entry(n, k);
            if (lhs != rhs) return cx({{"n", n}, {"k", k}}, lhs, rhs);
        }
    }
    return std::nullopt;
}

CheckResult check_pascal_region(const Bounds& b) {
    Family2Triangle tri(3);
    for (int n = 1; n <= b.n_max; ++n) {
        for (long long k = 0; 2 * k + 1 <= n; ++k) {
            Int lhs = tri.entry(n, k);
            Int rhs = tri.entry(n - 1, k) + (k >= 1 ? tri.entry(n - 1, k - 1) : Int(0));
            if (lhs != rhs) return cx({{"n", n}, {"k", k}}, lhs, rhs);
        }
    }
    return std::nullopt;
}

CheckResult check_conjecture(const Bounds& b) {
    for (int m = 4; m <= std::max(5, b.m_max); ++m) {
        Family2Triangle tri(m);
        for (int n = 1; n <= b.conj_n_max; ++n) {
            for (long long k = 0; static_cast<long long>(m - 1) * k + 1 <= n; ++k) {
                Int lhs = tri.entry(n, k);
                Int rhs = tri.entry(n - 1, k) + (k >= 1 ? tri.entry(n - 1, k - 1) : Int(0));
                if (lhs != rhs) return cx({{"m", m}, {"n", n}, {"k", k}}, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_genterm(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family1Triangle tri(m);
        for (int n = 0; n <= b.n_max; ++n) {
            for (long long k = 0; k <= n; ++k) {
                Int rec = tri.entry(n, k, Family1Method::recurrence);
                Int rio = tri.entry(n, k, Family1Method::riordan);
                Int clo = tri.entry(n, k, Family1Method::closed);
                if (rec != rio) return cx({{"m", m}, {"n", n}, {"k", k}}, rec, rio);
                if (rec != clo) return cx({{"m", m}, {"n", n}, {"k", k}}, rec, clo);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_gf_sums(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family1Triangle tri(m);
        auto row_gf = row_sum_series(m, b.n_max);
        auto diag_gf = antidiag_sum_series(m, b.n_max);
        auto row_rec = sum_recurrences(m, SumKind::row, b.n_max);
        auto diag_rec = sum_recurrences(m, SumKind::antidiag, b.n_max);
        for (int n = 0; n <= b.n_max; ++n) {
            Int rows = 0;
            for (long long k = 0; k <= n; ++k) rows += tri.entry(n, k);
            if (row_gf.coeff(n) != rows) return cx({{"m", m}, {"n", n}}, row_gf.coeff(n), rows);
            if (row_rec[static_cast<size_t>(n)] != rows)
                return cx({{"m", m}, {"n", n}}, row_rec[static_cast<size_t>(n)], rows);
            Int diag = 0;
            for (long long k = 0; 2 * k <= n; ++k) diag += tri.entry(n - k, k);
            if (diag_gf.coeff(n) != diag) return cx({{"m", m}, {"n", n}}, diag_gf.coeff(n), diag);
            if (diag_rec[static_cast<size_t>(n)] != diag)
                return cx({{"m", m}, {"n", n}}, diag_rec[static_cast<size_t>(n)], diag);
        }
    }
    return std::nullopt;
}

CheckResult check_bivar(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family1Triangle tri(m);
        auto gf = bivariate_gf(m, b.n_max);
        for (int n = 0; n <= b.n_max; ++n) {
            if (gf.row(n).degree() > n)
                return cx({{"m", m}, {"n", n}}, Int(gf.row(n).degree()), Int(n));
            for (long long k = 0; k <= n; ++k) {
                Int lhs = gf.coeff(n, static_cast<int>(k));
                Int rhs = tri.entry(n, k);
                if (lhs != rhs) return cx({{"m", m}, {"n", n}, {"k", k}}, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_poly_theorem(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        for (int L = 0; L <= b.n_max; ++L) {
            auto counts = count_by_fences(L, m); // enumeration oracle; guard may throw
            int j = L / m;
            int r = L % m;
            auto product = fib_product_power(j, m, r);
            for (int k = 0; 2 * k <= L; ++k) {
                Int lhs = counts.count(k) ? counts[k] : Int(0);
                Int rhs = poly_coeff(product, k);
                if (lhs != rhs) return cx({{"m", m}, {"n", L}, {"k", k}}, lhs, rhs);
            }
        }
    }
    return std::nullopt;
}

CheckResult check_subsets_corollaries(const Bounds& b) {
    for (int m = b.m_min; m <= b.m_max; ++m) {
        Family2Triangle tri(m);
        for (int n = 0; n <= b.n_max; ++n) {
            Int total = 0;
            int j = n / m;
            int r = n % m;
            auto product = fib_product_power(j + 1, m, r); // f_{j+1}^{m-r} f_{j+2}^r
            for (int k = 0; k <= n; ++k) {
                Int brute = count_restricted(n, m, k); // guard may throw
                Int rhs = tri.entry(n + m - k, k);
                if (brute != rhs) return cx({{"m", m}, {"n", n}, {"k", k}}, brute, rhs);
                Int via_poly = poly_coeff(product, k);
                if (brute != via_poly) return cx({{"m", m}, {"n", n}, {"k", k}}, brute, via_poly);
                total += brute;
            }
            Int all = count_all_sizes(n, m);
            if (total != all) return cx({{"m", m}, {"n", n}}, total, all);
        }
    }
    return std::nullopt;
}

struct Registered {
    const char* name;
    CheckFn fn;
    bool evidence_only;
};

const std::vector<Registered>& registry() {
    static const std::vector<Registered> reg = {
        {"ch_eq_chb", check_ch_eq_chb, false},
        {"adiag_sum", check_adiag_sum, false},
        {"col0", check_col0, false},
        {"col1", check_col1, false},
        {"diag", check_diag, false},
        {"zeros", check_zeros, false},
        {"jp_boundary", check_jp_boundary, false},
        {"mTj", check_mTj, false},
        {"four_squares", check_four_squares, false},
        {"B3", check_B3, false},
        {"rr3", check_rr3, false},
        {"pascal_region", check_pascal_region, false},
        {"conjecture", check_conjecture, true},
        {"genterm", check_genterm, false},
        {"gf_sums", check_gf_sums, false},
        {"bivar", check_bivar, false},
        {"poly_theorem", check_poly_theorem, false},
        {"subsets_corollaries", check_subsets_corollaries, false},
    };
    return reg;
}

} // namespace

json Bounds::to_json() const {
    return json{{"m_min", m_min},
                {"m_max", m_max},
                {"n_max", n_max},
                {"j_max", j_max},
                {"conj_n_max", conj_n_max}};
}

std::string to_string(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::pass: return "pass";
        case CheckVerdict::fail: return "fail";
        case CheckVerdict::evidence: return "evidence";
        case CheckVerdict::error: return "error";
    }
    return "?";
}

json IdentityCheck::to_json() const {
    json out;
    out["identity"] = name;
    out["bounds"] = bounds.to_json();
    out["verdict"] = to_string(verdict);
    if (counterexample) out["counterexample"] = *counterexample;
    if (!message.empty()) out["message"] = message;
    return out;
}

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& r : registry()) names.emplace_back(r.name);
    return names;
}

IdentityCheck verify(const std::string& name, const Bounds& bounds) {
    for (const auto& r : registry()) {
        if (name != r.name) continue;
        IdentityCheck result;
        result.name = name;
        result.bounds = bounds;
        try {
            auto counterexample = r.fn(bounds);
            if (counterexample) {
                result.verdict = CheckVerdict::fail;
                result.counterexample = std::move(counterexample);
            } else {
                result.verdict = r.evidence_only ? CheckVerdict::evidence : CheckVerdict::pass;
            }
        } catch (const guard_error& e) {
            result.verdict = CheckVerdict::error;
            result.message = e.what();
        }
        return result;
    }
    std::string valid;
    for (const auto& r : registry()) {
        if (!valid.empty()) valid += ", ";
        valid += r.name;
    }
    throw std::invalid_argument("unknown identity \"" + name + "\"; valid names: " + valid);
}

std::vector<IdentityCheck> verify_all(const Bounds& bounds) {
    std::vector<IdentityCheck> results;
    for (const auto& r : registry()) results.push_back(verify(r.name, bounds));
    return results;
}

} // namespace fencetri
