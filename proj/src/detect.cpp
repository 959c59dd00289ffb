#include "fencetri/detect.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fencetri {

namespace {

void validate(const MetatileSpec& spec) {
    if (spec.items.empty()) throw std::invalid_argument("metatile spec has no metatiles");
    for (const auto& it : spec.items) {
        if (it.size < 1)
            throw std::invalid_argument("metatile size must be >= 1, got " +
                                        std::to_string(it.size));
        if (it.specials < 0 || it.specials > it.size)
            throw std::invalid_argument("metatile specials must lie in [0, size], got (size=" +
                                        std::to_string(it.size) + ", specials=" +
                                        std::to_string(it.specials) + ")");
    }
}

std::string render_metatile(const Metatile& it) {
    return "(" + std::to_string(it.size) + "," + std::to_string(it.specials) + ")";
}

long long b_value(const Metatile& it, Orientation o) {
    return o == Orientation::direct ? it.specials : it.size - it.specials;
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

MetatileSpec MetatileSpec::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("metatile spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("metatile spec must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "mode" && key != "complete" && key != "metatiles" && key != "name")
            throw std::invalid_argument("metatile spec has unknown key \"" + key + "\"");
    }
    MetatileSpec spec;
    if (!doc.contains("mode") || !doc["mode"].is_string())
        throw std::invalid_argument("metatile spec needs a string \"mode\"");
    std::string mode = doc["mode"].get<std::string>();
    if (mode == "board_length")
        spec.mode = SizeMode::board_length;
    else if (mode == "tile_count")
        spec.mode = SizeMode::tile_count;
    else
        throw std::invalid_argument("metatile spec \"mode\" must be \"board_length\" or "
                                    "\"tile_count\", got \"" + mode + "\"");
    if (!doc.contains("complete") || !doc["complete"].is_boolean())
        throw std::invalid_argument("metatile spec needs a boolean \"complete\"");
    spec.complete = doc["complete"].get<bool>();
    if (!doc.contains("metatiles") || !doc["metatiles"].is_array())
        throw std::invalid_argument("metatile spec needs an array \"metatiles\"");
    for (const auto& entry : doc["metatiles"]) {
        if (!entry.is_object())
            throw std::invalid_argument("each metatile must be a JSON object");
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "size" && key != "specials")
                throw std::invalid_argument("metatile has unknown key \"" + key + "\"");
        }
        if (!entry.contains("size") || !entry["size"].is_number_integer())
            throw std::invalid_argument("metatile needs an integer \"size\"");
        if (!entry.contains("specials") || !entry["specials"].is_number_integer())
            throw std::invalid_argument("metatile needs an integer \"specials\"");
        spec.items.push_back({entry["size"].get<long long>(), entry["specials"].get<long long>()});
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw std::invalid_argument("metatile spec \"name\" must be a string");
        spec.name = doc["name"].get<std::string>();
    }
    validate(spec);
    return spec;
}

MetatileSpec MetatileSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open metatile spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

DetectReport detect(const MetatileSpec& spec, int derive_order) {
    validate(spec);
    DetectReport report;

    bool exists_direct = false, exists_rr = false;
    std::vector<Metatile> direct_violations, rr_violations;
    for (const auto& it : spec.items) {
        if (it.size == 1 && it.specials == 1) exists_direct = true;
        if (it.size == 1 && it.specials == 0) exists_rr = true;
        if (it.specials > 1) direct_violations.push_back(it);
        long long non_special = it.size - it.specials;
        if (non_special > 1) rr_violations.push_back(it);
    }

    auto decide = [&](bool exists, const std::vector<Metatile>& violations,
                      const std::string& exist_clause,
                      const std::string& universal_clause) -> Verdict {
        if (!violations.empty()) {
            for (const auto& v : violations)
                report.witnesses.push_back({universal_clause, v});
            return Verdict::no;
        }
        if (!spec.complete) return Verdict::unknown;
        if (!exists) {
            report.witnesses.push_back({exist_clause, std::nullopt});
            return Verdict::no;
        }
        return Verdict::yes;
    };

    report.riordan = decide(exists_direct, direct_violations,
                            "no metatile of size 1 containing exactly one special tile",
                            "metatile contains more than one special tile");
    report.row_reversed = decide(exists_rr, rr_violations,
                                 "no metatile of size 1 without special tiles",
                                 "metatile contains more than one non-special tile");

    if (report.riordan == Verdict::yes)
        report.derived_direct = derive_pq(spec, Orientation::direct, derive_order);
    if (report.row_reversed == Verdict::yes)
        report.derived_row_reversed = derive_pq(spec, Orientation::row_reversed, derive_order);
    return report;
}

std::pair<TruncatedSeries, TruncatedSeries> derive_pq(const MetatileSpec& spec,
                                                      Orientation orientation, int T) {
    validate(spec);
    if (!spec.complete)
        throw std::domain_error("derive_pq requires a complete metatile list");
    long long max_size = 0;
    for (const auto& it : spec.items) {
        long long b = b_value(it, orientation);
        if (b != 0 && b != 1)
            throw std::domain_error("derive_pq called on a non-qualifying spec: metatile " +
                                    render_metatile(it) + " has column shift " +
                                    std::to_string(b));
        max_size = std::max(max_size, it.size);
    }
    bool has_unit = false;
    for (const auto& it : spec.items)
        if (it.size == 1 && b_value(it, orientation) == 1) has_unit = true;
    if (!has_unit)
        throw std::domain_error("derive_pq called on a non-qualifying spec: no size-1 metatile "
                                "advancing the column index");

    // p = 1/(1 - S0), q = S1/(1 - S0) with S_b = sum of x^{size} over
    // metatiles of column shift b.
    std::vector<Int> s0(static_cast<size_t>(max_size) + 1, 0);
    std::vector<Int> s1(static_cast<size_t>(max_size) + 1, 0);
    for (const auto& it : spec.items) {
        auto& target = b_value(it, orientation) == 0 ? s0 : s1;
        target[static_cast<size_t>(it.size)] += 1;
    }
    std::vector<Int> den(s0.size());
    den[0] = 1;
    for (size_t i = 1; i < s0.size(); ++i) den[i] = -s0[i];
    IntPolynomial den_poly{std::vector<Int>(den)};
    auto p = TruncatedSeries::ratio(IntPolynomial::constant(1), den_poly, T);
    auto q = TruncatedSeries::ratio(IntPolynomial(std::move(s1)), den_poly, T);
    return {std::move(p), std::move(q)};
}

std::vector<std::vector<Int>> recursion_counts(const MetatileSpec& spec, int N) {
    validate(spec);
    if (!spec.complete)
        throw std::domain_error("recursion_counts requires a complete metatile list");
    if (N < 0) throw std::domain_error("recursion_counts: N must be non-negative");
    std::vector<std::vector<Int>> t;
    auto at = [&](long long n, long long k) -> Int {
        if (n < 0 || k < 0 || k > n) return 0;
        return t[static_cast<size_t>(n)][static_cast<size_t>(k)];
    };
    for (long long n = 0; n <= N; ++n) {
        t.emplace_back(static_cast<size_t>(n) + 1);
        for (long long k = 0; k <= n; ++k) {
            Int v = (n == 0 && k == 0) ? 1 : 0;
            for (const auto& it : spec.items) v += at(n - it.size, k - it.specials);
            t.back()[static_cast<size_t>(k)] = std::move(v);
        }
    }
    return t;
}

} // namespace fencetri
