#include "fencetri/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fencetri/detect.hpp"
#include "fencetri/errors.hpp"
#include "fencetri/fibpoly.hpp"
#include "fencetri/identities.hpp"
#include "fencetri/render.hpp"
#include "fencetri/riordan.hpp"
#include "fencetri/subsets.hpp"
#include "fencetri/tiling.hpp"

namespace fencetri {

namespace {

constexpr int kMaxRows = 200;
constexpr int kMaxCount = 500;
constexpr int kOracleCountGuard = 30;
constexpr int kOracleListGuard = 14;

/// Raised when methods that must agree do not; maps to exit status 2.
class verification_failure : public std::runtime_error {
public:
    explicit verification_failure(const std::string& msg) : std::runtime_error(msg) {}
};

struct TriangleOptions {
    std::string family;
    int m = 1;
    int rows = 0;
    std::string method; // empty = family default
    std::string format = "table";
    long long offset = 0;
};

std::vector<std::vector<Int>> pascal_rows(int m, int rows, const std::string& method) {
    Family1Triangle tri(m);
    std::vector<std::vector<Int>> out;
    if (method == "bivar") {
        auto gf = bivariate_gf(m, rows);
        for (int n = 0; n <= rows; ++n) {
            std::vector<Int> row;
            for (int k = 0; k <= n; ++k) row.push_back(gf.coeff(n, k));
            out.push_back(std::move(row));
        }
        return out;
    }
    Family1Method fm;
    if (method == "recurrence") fm = Family1Method::recurrence;
    else if (method == "riordan") fm = Family1Method::riordan;
    else if (method == "closed") fm = Family1Method::closed;
    else throw std::invalid_argument("unknown pascal-family method \"" + method +
                                     "\" (expected recurrence, riordan, closed, bivar, or all)");
    for (int n = 0; n <= rows; ++n) out.push_back(tri.row(n, fm));
    return out;
}

std::vector<std::vector<Int>> tiling_rows(int m, int rows, const std::string& method) {
    Family2Triangle tri(m);
    Family2Method fm;
    if (method == "poly") fm = Family2Method::poly;
    else if (method == "oracle") fm = Family2Method::oracle;
    else if (method == "recurrence3") fm = Family2Method::recurrence3;
    else if (method == "pascal_region") fm = Family2Method::pascal_region;
    else throw std::invalid_argument("unknown tiling-family method \"" + method +
                                     "\" (expected poly, oracle, recurrence3, pascal_region, "
                                     "or all)");
    std::vector<std::vector<Int>> out;
    for (int n = 0; n <= rows; ++n) out.push_back(tri.row(n, fm));
    return out;
}

void diff_methods(const std::map<std::string, std::vector<std::vector<Int>>>& per_method) {
    const auto& reference = *per_method.begin();
    for (const auto& [name, rows] : per_method) {
        if (rows == reference.second) continue;
        for (size_t n = 0; n < rows.size(); ++n)
            for (size_t k = 0; k < rows[n].size(); ++k)
                if (rows[n][k] != reference.second[n][k])
                    throw verification_failure(
                        "method disagreement at (n,k)=(" + std::to_string(n) + "," +
                        std::to_string(k) + "): " + reference.first + "=" +
                        reference.second[n][k].str() + ", " + name + "=" + rows[n][k].str());
        throw verification_failure("method disagreement between " + reference.first + " and " +
                                   name);
    }
}

int cmd_triangle(const TriangleOptions& opt, std::ostream& out) {
    if (opt.m < 1) throw std::invalid_argument("--m must be a positive integer");
    if (opt.rows < 0) throw std::invalid_argument("--rows must be non-negative");
    if (opt.rows > kMaxRows)
        throw guard_error("triangle rendering is limited to --rows <= " +
                          std::to_string(kMaxRows));
    bool pascal = opt.family == "pascal";
    if (!pascal && opt.family != "tiling")
        throw std::invalid_argument("--family must be pascal or tiling");

    std::string method = opt.method.empty() ? (pascal ? "recurrence" : "poly") : opt.method;
    std::vector<std::vector<Int>> rows;
    if (method == "all") {
        std::map<std::string, std::vector<std::vector<Int>>> per_method;
        if (pascal) {
            for (const char* name : {"recurrence", "riordan", "closed", "bivar"})
                per_method[name] = pascal_rows(opt.m, opt.rows, name);
        } else {
            per_method["poly"] = tiling_rows(opt.m, opt.rows, "poly");
            if (2 * opt.rows <= kOracleCountGuard)
                per_method["oracle"] = tiling_rows(opt.m, opt.rows, "oracle");
            if (opt.m == 3) {
                per_method["recurrence3"] = tiling_rows(opt.m, opt.rows, "recurrence3");
                per_method["pascal_region"] = tiling_rows(opt.m, opt.rows, "pascal_region");
            }
        }
        diff_methods(per_method);
        rows = per_method.begin()->second;
    } else {
        if (!pascal && method == "oracle" && 2 * opt.rows > kOracleCountGuard)
            throw guard_error("oracle method needs n+k <= " + std::to_string(kOracleCountGuard) +
                              "; --rows " + std::to_string(opt.rows) + " can reach n+k = " +
                              std::to_string(2 * opt.rows));
        rows = pascal ? pascal_rows(opt.m, opt.rows, method)
                      : tiling_rows(opt.m, opt.rows, method);
    }
    out << render_triangle({opt.family, opt.m, std::move(rows)}, parse_format(opt.format),
                           opt.offset);
    return 0;
}

struct SequenceOptions {
    std::string kind;
    std::string family;
    int m = 1;
    int count = 0;
    std::string method; // empty = kind default
    std::string format = "table";
    long long offset = 0;
};

std::vector<Int> sequence_terms(const SequenceOptions& opt, const std::string& method) {
    const int N = opt.count - 1;
    std::vector<Int> terms;
    terms.reserve(static_cast<size_t>(opt.count));
    bool pascal = opt.family == "pascal";
    if (pascal) {
        Family1Triangle tri(opt.m);
        if (opt.kind == "row_sums") {
            if (method == "gf") {
                auto s = row_sum_series(opt.m, N);
                for (int n = 0; n <= N; ++n) terms.push_back(s.coeff(n));
            } else if (method == "recurrence") {
                terms = sum_recurrences(opt.m, SumKind::row, N);
            } else if (method == "direct") {
                for (int n = 0; n <= N; ++n) {
                    Int acc = 0;
                    for (long long k = 0; k <= n; ++k) acc += tri.entry(n, k);
                    terms.push_back(std::move(acc));
                }
            } else {
                throw std::invalid_argument("unknown method \"" + method +
                                            "\" (expected gf, recurrence, direct, or all)");
            }
        } else if (opt.kind == "antidiag_sums") {
            if (method == "gf") {
                auto s = antidiag_sum_series(opt.m, N);
                for (int n = 0; n <= N; ++n) terms.push_back(s.coeff(n));
            } else if (method == "recurrence") {
                terms = sum_recurrences(opt.m, SumKind::antidiag, N);
            } else if (method == "direct") {
                for (int n = 0; n <= N; ++n) {
                    Int acc = 0;
                    for (long long k = 0; 2 * k <= n; ++k) acc += tri.entry(n - k, k);
                    terms.push_back(std::move(acc));
                }
            } else {
                throw std::invalid_argument("unknown method \"" + method +
                                            "\" (expected gf, recurrence, direct, or all)");
            }
        } else {
            throw std::invalid_argument("kind \"" + opt.kind +
                                        "\" is not available for the pascal family");
        }
        return terms;
    }
    // tiling family
    if (opt.kind == "total_tilings" || opt.kind == "row_sums") {
        if (method == "direct") {
            for (int n = 0; n <= N; ++n) terms.push_back(total_tilings(opt.m, n));
        } else if (method == "recurrence") {
            if (opt.m != 3)
                throw std::invalid_argument(
                    "the total-tilings recurrence is only available for m=3");
            terms = b3_totals(N);
        } else {
            throw std::invalid_argument("unknown method \"" + method +
                                        "\" (expected direct, recurrence, or all)");
        }
    } else if (opt.kind == "antidiag_sums") {
        Family2Triangle tri(opt.m);
        if (method == "direct") {
            for (int n = 0; n <= N; ++n) {
                Int acc = 0;
                for (long long k = 0; 2 * k <= n; ++k) acc += tri.entry(n - k, k);
                terms.push_back(std::move(acc));
            }
        } else if (method == "formula") {
            for (int n = 0; n <= N; ++n) {
                long long j = n / opt.m;
                int r = n % opt.m;
                terms.push_back(
                    int_pow(fib_number(j), static_cast<unsigned long long>(opt.m - r)) *
                    int_pow(fib_number(j + 1), static_cast<unsigned long long>(r)));
            }
        } else {
            throw std::invalid_argument("unknown method \"" + method +
                                        "\" (expected direct, formula, or all)");
        }
    } else {
        throw std::invalid_argument("kind \"" + opt.kind +
                                    "\" is not available for the tiling family");
    }
    return terms;
}

int cmd_sequence(const SequenceOptions& opt, std::ostream& out) {
    if (opt.m < 1) throw std::invalid_argument("--m must be a positive integer");
    if (opt.count < 1) throw std::invalid_argument("--count must be at least 1");
    if (opt.count > kMaxCount)
        throw guard_error("sequence output is limited to --count <= " +
                          std::to_string(kMaxCount));
    bool pascal = opt.family == "pascal";
    if (!pascal && opt.family != "tiling")
        throw std::invalid_argument("--family must be pascal or tiling");

    std::string method = opt.method;
    if (method.empty()) method = pascal ? "gf" : "direct";
    std::vector<Int> terms;
    if (method == "all") {
        std::vector<std::string> methods;
        if (pascal) {
            methods = {"gf", "recurrence", "direct"};
        } else if (opt.kind == "antidiag_sums") {
            methods = {"direct", "formula"};
        } else {
            methods = {"direct"};
            if (opt.m == 3) methods.push_back("recurrence");
        }
        std::map<std::string, std::vector<Int>> per_method;
        for (const auto& name : methods) per_method[name] = sequence_terms(opt, name);
        const auto& reference = *per_method.begin();
        for (const auto& [name, seq] : per_method) {
            for (size_t i = 0; i < seq.size(); ++i)
                if (seq[i] != reference.second[i])
                    throw verification_failure("method disagreement at term " +
                                               std::to_string(i) + ": " + reference.first + "=" +
                                               reference.second[i].str() + ", " + name + "=" +
                                               seq[i].str());
        }
        terms = reference.second;
    } else {
        terms = sequence_terms(opt, method);
    }
    out << render_sequence(opt.kind, opt.m, terms, parse_format(opt.format), opt.offset);
    return 0;
}

int cmd_oracle(int m, int length, bool list, std::ostream& out) {
    if (m < 1) throw std::invalid_argument("--m must be a positive integer");
    if (length < 0) throw std::invalid_argument("--length must be non-negative");
    if (list) {
        if (length > kOracleListGuard)
            throw guard_error("tiling listings are limited to --length <= " +
                              std::to_string(kOracleListGuard));
        for (const auto& t : enumerate_tilings(length, m)) out << t.render() << "\n";
        return 0;
    }
    if (length > kOracleCountGuard)
        throw guard_error("tiling counts are limited to --length <= " +
                          std::to_string(kOracleCountGuard));
    auto counts = count_by_fences(length, m);
    Int total = 0;
    for (const auto& [k, c] : counts) {
        out << "k=" << k << ": " << c.str() << "\n";
        total += c;
    }
    out << "total: " << total.str() << "\n";
    return 0;
}

int cmd_subsets(int n, int m, std::optional<int> k, bool list, std::ostream& out) {
    if (m < 1) throw std::invalid_argument("--m must be a positive integer");
    if (n < 0) throw std::invalid_argument("--n must be non-negative");
    Family2Triangle tri(m);
    auto crosscheck = [&](int size, const Int& counted) {
        Int expected = tri.entry(n + m - size, size);
        if (counted != expected)
            throw verification_failure("subset count S(" + std::to_string(n) + "," +
                                       std::to_string(size) + ") = " + counted.str() +
                                       " disagrees with the tiling triangle value " +
                                       expected.str());
    };
    if (list) {
        auto subsets = enumerate_restricted(n, m, k);
        std::map<int, Int> by_size;
        for (const auto& s : subsets) {
            out << s.render() << "\n";
            by_size[s.size()] += 1;
        }
        for (const auto& [size, c] : by_size) crosscheck(size, c);
        return 0;
    }
    if (k) {
        Int c = count_restricted(n, m, *k);
        crosscheck(*k, c);
        out << c.str() << "\n";
        return 0;
    }
    Int total = 0;
    for (int size = 0; size <= n; ++size) {
        Int c = count_restricted(n, m, size);
        crosscheck(size, c);
        if (c != 0) out << "k=" << size << ": " << c.str() << "\n";
        total += c;
    }
    if (total != count_all_sizes(n, m))
        throw verification_failure("total subset count disagrees with the Fibonacci product");
    out << "total: " << total.str() << "\n";
    return 0;
}

void print_series_prefix(std::ostream& out, const char* label, const TruncatedSeries& s) {
    out << "  " << label << " coefficients:";
    int top = std::min(s.order(), 8);
    for (int i = 0; i <= top; ++i) out << " " << s.coeff(i).str();
    if (s.order() > top) out << " ...";
    out << "\n";
}

int cmd_detect(const std::string& spec_path, int order, std::ostream& out) {
    if (order < 1) throw std::invalid_argument("--order must be at least 1");
    MetatileSpec spec = MetatileSpec::from_file(spec_path);
    DetectReport report = detect(spec, order);
    if (spec.name) out << "name: " << *spec.name << "\n";
    out << "mode: " << (spec.mode == SizeMode::board_length ? "board_length" : "tile_count")
        << (spec.complete ? " (complete)" : " (incomplete)") << "\n";
    out << "riordan: " << to_string(report.riordan) << "\n";
    if (report.derived_direct) {
        print_series_prefix(out, "p", report.derived_direct->first);
        print_series_prefix(out, "q", report.derived_direct->second);
    }
    out << "row-reversed riordan: " << to_string(report.row_reversed) << "\n";
    if (report.derived_row_reversed) {
        print_series_prefix(out, "p", report.derived_row_reversed->first);
        print_series_prefix(out, "q", report.derived_row_reversed->second);
    }
    for (const auto& w : report.witnesses) {
        out << "witness: " << w.clause;
        if (w.metatile)
            out << " -- metatile (size=" << w.metatile->size
                << ", specials=" << w.metatile->specials << ")";
        out << "\n";
    }
    return 0;
}

struct VerifyOptions {
    std::string identity; // empty = all
    Bounds bounds;
    std::string format = "table";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    std::vector<IdentityCheck> checks;
    if (opt.identity.empty())
        checks = verify_all(opt.bounds);
    else
        checks.push_back(verify(opt.identity, opt.bounds));

    int fails = 0, errors = 0;
    if (opt.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& c : checks) arr.push_back(c.to_json());
        out << arr.dump() << "\n";
    }
    for (const auto& c : checks) {
        if (opt.format != "json") {
            out << "[" << to_string(c.verdict) << "] " << c.name;
            if (c.counterexample) out << " counterexample: " << c.counterexample->dump();
            if (!c.message.empty()) out << ": " << c.message;
            out << "\n";
        }
        if (c.verdict == CheckVerdict::fail) ++fails;
        if (c.verdict == CheckVerdict::error) ++errors;
    }
    if (opt.format != "json") {
        out << checks.size() - static_cast<size_t>(fails) - static_cast<size_t>(errors)
            << " of " << checks.size() << " checks pass";
        if (fails) out << ", " << fails << " fail";
        if (errors) out << ", " << errors << " guard errors";
        out << "\n";
    }
    if (fails) return 2;
    if (errors) return 3;
    return 0;
}

int cmd_fibpoly(std::optional<int> n, std::optional<int> j, std::optional<int> m,
                std::optional<int> r, std::ostream& out) {
    if (n && (j || m || r))
        throw std::invalid_argument("use either --n or the --j/--m/--r triple");
    if (n) {
        out << fib_poly(*n).to_string() << "\n";
        return 0;
    }
    if (!j || !m || !r)
        throw std::invalid_argument("fibpoly needs --n, or all of --j, --m, and --r");
    out << fib_product_power(*j, *m, *r).to_string() << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pascal-like triangles from Riordan arrays and square-and-fence tilings"};
    app.name("fencetri");
    app.require_subcommand(1);

    TriangleOptions tri_opt;
    auto* triangle = app.add_subcommand("triangle", "Render a triangle of either family");
    triangle->add_option("--family", tri_opt.family, "pascal or tiling")->required();
    triangle->add_option("--m", tri_opt.m, "family parameter m (>= 1)")->required();
    triangle->add_option("--rows", tri_opt.rows, "last row index to render")->required();
    triangle->add_option("--method", tri_opt.method,
                         "pascal: recurrence|riordan|closed|bivar|all; "
                         "tiling: poly|oracle|recurrence3|pascal_region|all");
    triangle->add_option("--format", tri_opt.format, "table|csv|json|bfile");
    triangle->add_option("--offset", tri_opt.offset, "first index for bfile output");

    SequenceOptions seq_opt;
    auto* sequence = app.add_subcommand("sequence", "Emit row/antidiagonal sums or tiling totals");
    sequence->add_option("--kind", seq_opt.kind, "row_sums|antidiag_sums|total_tilings")
        ->required();
    sequence->add_option("--family", seq_opt.family, "pascal or tiling")->required();
    sequence->add_option("--m", seq_opt.m, "family parameter m (>= 1)")->required();
    sequence->add_option("--count", seq_opt.count, "number of terms")->required();
    sequence->add_option("--method", seq_opt.method,
                         "pascal: gf|recurrence|direct|all; tiling: direct|recurrence|formula|all");
    sequence->add_option("--format", seq_opt.format, "table|csv|json|bfile");
    sequence->add_option("--offset", seq_opt.offset, "first index for bfile/csv output");

    int oracle_m = 1, oracle_length = 0;
    bool oracle_list = false;
    auto* oracle = app.add_subcommand("oracle", "Enumerate square-and-fence tilings of a board");
    oracle->add_option("--m", oracle_m, "fence parameter m (>= 1)")->required();
    oracle->add_option("--length", oracle_length, "board length")->required();
    oracle->add_flag("--list", oracle_list, "list tilings instead of counting");

    int sub_n = 0, sub_m = 1;
    std::optional<int> sub_k;
    bool sub_list = false;
    auto* subsets = app.add_subcommand("subsets", "Count or list difference-m-avoiding subsets");
    subsets->add_option("--n", sub_n, "universe size")->required();
    subsets->add_option("--m", sub_m, "forbidden difference (>= 1)")->required();
    subsets->add_option("--k", sub_k, "subset size (default: all sizes)");
    subsets->add_flag("--list", sub_list, "list subsets instead of counting");

    std::string spec_path;
    int detect_order = 16;
    auto* detect_cmd = app.add_subcommand("detect", "Riordan-array detection for a metatile spec");
    detect_cmd->add_option("--spec", spec_path, "path to a metatile spec JSON file")->required();
    detect_cmd->add_option("--order", detect_order, "truncation order for derived (p,q)");

    VerifyOptions ver_opt;
    std::string m_range;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity verification harness");
    verify_cmd->add_option("--identity", ver_opt.identity, "single identity name (default: all)");
    verify_cmd->add_option("--max-n", ver_opt.bounds.n_max, "board/tile-count bound");
    verify_cmd->add_option("--m-range", m_range, "m range as min:max");
    verify_cmd->add_option("--max-j", ver_opt.bounds.j_max, "antidiagonal index bound");
    verify_cmd->add_option("--conj-max-n", ver_opt.bounds.conj_n_max,
                           "n bound for the conjecture check");
    verify_cmd->add_option("--format", ver_opt.format, "table|json");

    std::optional<int> fp_n, fp_j, fp_m, fp_r;
    auto* fibpoly_cmd = app.add_subcommand("fibpoly", "Print f_n(x) or f_j^{m-r} f_{j+1}^r");
    fibpoly_cmd->add_option("--n", fp_n, "index of f_n");
    fibpoly_cmd->add_option("--j", fp_j, "lower polynomial index");
    fibpoly_cmd->add_option("--m", fp_m, "total power");
    fibpoly_cmd->add_option("--r", fp_r, "power of f_{j+1}");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (*triangle) return cmd_triangle(tri_opt, out);
        if (*sequence) return cmd_sequence(seq_opt, out);
        if (*oracle) return cmd_oracle(oracle_m, oracle_length, oracle_list, out);
        if (*subsets) return cmd_subsets(sub_n, sub_m, sub_k, sub_list, out);
        if (*detect_cmd) return cmd_detect(spec_path, detect_order, out);
        if (*verify_cmd) {
            if (!m_range.empty()) {
                auto colon = m_range.find(':');
                try {
                    if (colon == std::string::npos) {
                        ver_opt.bounds.m_min = ver_opt.bounds.m_max = std::stoi(m_range);
                    } else {
                        ver_opt.bounds.m_min = std::stoi(m_range.substr(0, colon));
                        ver_opt.bounds.m_max = std::stoi(m_range.substr(colon + 1));
                    }
                } catch (const std::exception&) {
                    throw std::invalid_argument("--m-range expects min:max, got \"" + m_range +
                                                "\"");
                }
            }
            return cmd_verify(ver_opt, out);
        }
        if (*fibpoly_cmd) return cmd_fibpoly(fp_n, fp_j, fp_m, fp_r, out);
        err << "no subcommand selected\n";
        return 1;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const guard_error& e) {
        err << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const verification_failure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace fencetri
