#include "fencetri/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fencetri {

namespace {

std::string pad_left(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "bfile") return Format::bfile;
    throw std::invalid_argument("unknown format \"" + name +
                                "\" (expected table, csv, json, or bfile)");
}

std::string render_triangle(const TriangleData& t, Format format, long long offset) {
    std::ostringstream os;
    switch (format) {
        case Format::table: {
            size_t width = 1;
            int max_k = 0;
            for (size_t n = 0; n < t.rows.size(); ++n) {
                max_k = std::max(max_k, static_cast<int>(t.rows[n].size()) - 1);
                for (const auto& v : t.rows[n]) width = std::max(width, v.str().size());
            }
            width = std::max(width, std::to_string(max_k).size());
            const std::string label = "n\\k";
            size_t label_width = std::max(label.size(), std::to_string(t.rows.size()).size());
            os << pad_left(label, label_width) << " |";
            for (int k = 0; k <= max_k; ++k) os << " " << pad_left(std::to_string(k), width);
            os << "\n";
            os << std::string(label_width + 1, '-') << "+"
               << std::string((width + 1) * static_cast<size_t>(max_k + 1), '-') << "\n";
            for (size_t n = 0; n < t.rows.size(); ++n) {
                os << pad_left(std::to_string(n), label_width) << " |";
                for (const auto& v : t.rows[n]) os << " " << pad_left(v.str(), width);
                os << "\n";
            }
            return os.str();
        }
        case Format::csv: {
            for (size_t n = 0; n < t.rows.size(); ++n)
                for (size_t k = 0; k < t.rows[n].size(); ++k)
                    os << n << "," << k << "," << t.rows[n][k].str() << "\n";
            return os.str();
        }
        case Format::json: {
            nlohmann::json doc;
            doc["family"] = t.family;
            doc["m"] = t.m;
            auto rows = nlohmann::json::array();
            for (const auto& row : t.rows) {
                auto jrow = nlohmann::json::array();
                for (const auto& v : row) jrow.push_back(v.str());
                rows.push_back(std::move(jrow));
            }
            doc["rows"] = std::move(rows);
            return doc.dump() + "\n";
        }
        case Format::bfile: {
            std::vector<Int> flat;
            for (const auto& row : t.rows) flat.insert(flat.end(), row.begin(), row.end());
            return render_bfile(flat, offset);
        }
    }
    throw std::logic_error("unreachable");
}

std::string render_sequence(const std::string& kind, int m, const std::vector<Int>& terms,
                            Format format, long long offset) {
    std::ostringstream os;
    switch (format) {
        case Format::table: {
            for (size_t i = 0; i < terms.size(); ++i) {
                if (i > 0) os << " ";
                os << terms[i].str();
            }
            os << "\n";
            return os.str();
        }
        case Format::csv: {
            for (size_t i = 0; i < terms.size(); ++i)
                os << offset + static_cast<long long>(i) << "," << terms[i].str() << "\n";
            return os.str();
        }
        case Format::json: {
            nlohmann::json doc;
            doc["kind"] = kind;
            doc["m"] = m;
            doc["offset"] = offset;
            auto arr = nlohmann::json::array();
            for (const auto& v : terms) arr.push_back(v.str());
            doc["terms"] = std::move(arr);
            return doc.dump() + "\n";
        }
        case Format::bfile:
            return render_bfile(terms, offset);
    }
    throw std::logic_error("unreachable");
}

std::string render_bfile(const std::vector<Int>& terms, long long offset) {
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i)
        os << offset + static_cast<long long>(i) << " " << terms[i].str() << "\n";
    return os.str();
}

std::pair<long long, std::vector<Int>> parse_bfile(const std::string& text) {
    std::vector<Int> terms;
    long long offset = 0;
    bool have_offset = false;
    size_t pos = 0;
    int line_no = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string::npos)
            throw std::invalid_argument("b-file line " + std::to_string(line_no + 1) +
                                        " is not newline-terminated");
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        size_t space = line.find(' ');
        if (space == std::string::npos || space == 0 || space + 1 >= line.size() ||
            line.find(' ', space + 1) != std::string::npos)
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        " must be exactly two space-separated tokens");
        long long index;
        try {
            size_t used = 0;
            index = std::stoll(line.substr(0, space), &used);
            if (used != space) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                        " has a malformed index");
        }
        std::string value = line.substr(space + 1);
        for (size_t i = 0; i < value.size(); ++i) {
            bool digit = value[i] >= '0' && value[i] <= '9';
            bool sign = i == 0 && value[i] == '-' && value.size() > 1;
            if (!digit && !sign)
                throw std::invalid_argument("b-file line " + std::to_string(line_no) +
                                            " has a malformed value");
        }
        if (!have_offset) {
            offset = index;
            have_offset = true;
        } else if (index != offset + static_cast<long long>(terms.size())) {
            throw std::invalid_argument("b-file indices must be consecutive; line " +
                                        std::to_string(line_no) + " has index " +
                                        std::to_string(index));
        }
        terms.emplace_back(value);
    }
    return {offset, std::move(terms)};
}

} // namespace fencetri
