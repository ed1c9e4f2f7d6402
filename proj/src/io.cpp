#include "trop/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trop {

namespace {

Matrix parse_plain(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("empty matrix document", lineno, 1);
    std::istringstream header(line);
    long long m = 0, n = 0;
    if (!(header >> m >> n) || m < 1 || n < 1)
        throw ParseError("expected header `m n` with positive sizes", lineno, 1);

    Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        if (!next_line()) throw ParseError("missing matrix row " + std::to_string(i), lineno, 1);
        std::size_t col = 0, pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size()) break;
            std::size_t start = pos;
            while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            ++col;
            if (col > a.cols())
                throw ParseError("row " + std::to_string(i) + " has more than " + std::to_string(n) + " entries",
                                 lineno, start + 1);
            try {
                a.at(i, col) = parse_scalar(std::string_view(line).substr(start, pos - start));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno, start + 1);
            }
        }
        if (col != a.cols())
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(col) + " entries, expected " +
                                 std::to_string(n),
                             lineno, 1);
    }
    return a;
}

Matrix parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what(), 0, 0);
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].empty())
        throw ParseError("json matrix needs a nonempty \"rows\" array", 0, 0);
    std::vector<Vector> rows;
    for (const auto& jrow : doc["rows"]) {
        if (!jrow.is_array() || jrow.empty()) throw ParseError("json rows must be nonempty arrays", 0, 0);
        Vector r;
        for (const auto& cell : jrow) {
            if (!cell.is_object()) throw ParseError("json entries must be objects", 0, 0);
            if (cell.value("neginf", false)) {
                r.push_back(Scalar::neg_inf());
                continue;
            }
            if (!cell.contains("v") || !cell["v"].is_string())
                throw ParseError("json entry needs a string \"v\" or \"neginf\": true", 0, 0);
            Scalar x = parse_scalar(cell["v"].get<std::string>());
            if (x.has_ghost_tag()) throw ParseError("json magnitudes carry the tag in \"g\", not in \"v\"", 0, 0);
            r.push_back(cell.value("g", false) ? ghost(x) : x);
        }
        rows.push_back(std::move(r));
    }
    try {
        return Matrix::from_rows(rows);
    } catch (const ShapeError& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty matrix document", 1, 1);
    return text[first] == '{' ? parse_json(text) : parse_plain(text);
}

std::string format_matrix_plain(const Matrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            if (j > 1) out += ' ';
            out += to_string(a.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string format_matrix_json(const Matrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            const Scalar& x = a.at(i, j);
            if (x.is_neg_inf()) row.push_back({{"neginf", true}});
            else row.push_back({{"v", x.magnitude().str()}, {"g", x.has_ghost_tag()}});
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", std::move(rows)}}.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace trop
