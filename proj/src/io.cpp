#include "latkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace latkit {

namespace {

// at most this many entries before we refuse to allocate
constexpr unsigned long long kMaxEntries = 100'000'000ULL;

bool valid_integer_token(const std::string& tok) {
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) ++i;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

mpz_class parse_entry(const std::string& tok) {
    if (!valid_integer_token(tok))
        throw parse_error("invalid integer '" + tok + "'");
    return mpz_class(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::size_t parse_count(const std::string& tok, const char* what) {
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw parse_error(std::string("invalid ") + what + " '" + tok + "'");
    unsigned long long v = 0;
    try {
        v = std::stoull(tok);
    } catch (const std::exception&) {
        throw parse_error(std::string("invalid ") + what + " '" + tok + "'");
    }
    if (v == 0) throw parse_error(std::string(what) + " must be >= 1");
    return static_cast<std::size_t>(v);
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& content) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : content) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    std::size_t li = 0;
    auto next_line = [&]() -> const std::string& {
        if (li >= lines.size()) throw parse_error("unexpected end of file");
        return lines[li++];
    };

    std::vector<std::string> header = split_ws(next_line());
    if (header.size() != 2)
        throw parse_error("header must be exactly 'k n'");
    std::size_t rows = parse_count(header[0], "row count");
    std::size_t cols = parse_count(header[1], "column count");
    if (static_cast<unsigned long long>(rows) * cols > kMaxEntries)
        throw parse_error("matrix too large");

    IntMatrix M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<std::string> toks = split_ws(next_line());
        if (toks.size() != cols)
            throw parse_error("row " + std::to_string(i + 1) + " has " +
                              std::to_string(toks.size()) + " entries, expected " +
                              std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = parse_entry(toks[j]);
    }
    for (; li < lines.size(); ++li)
        if (!split_ws(lines[li]).empty())
            throw parse_error("trailing content after matrix rows");
    return M;
}

IntMatrix parse_matrix_json(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw parse_error("JSON matrix needs fields rows, cols, entries");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw parse_error("rows and cols must be nonnegative integers");
    unsigned long long rows = j["rows"].get<unsigned long long>();
    unsigned long long cols = j["cols"].get<unsigned long long>();
    if (rows == 0 || cols == 0) throw parse_error("rows and cols must be >= 1");
    if (rows * cols > kMaxEntries) throw parse_error("matrix too large");
    if (!j["entries"].is_array() || j["entries"].size() != rows * cols)
        throw parse_error("entries must be an array of rows*cols decimal strings");
    IntMatrix M(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::size_t idx = 0;
    for (const auto& e : j["entries"]) {
        if (!e.is_string()) throw parse_error("entries must be decimal strings");
        M(idx / cols, idx % cols) = parse_entry(e.get<std::string>());
        ++idx;
    }
    return M;
}

IntMatrix parse_matrix(const std::string& content) {
    for (char ch : content) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? parse_matrix_json(content) : parse_matrix_text(content);
    }
    throw parse_error("empty matrix file");
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

std::string to_text(const IntMatrix& M) {
    std::string out = std::to_string(M.rows()) + " " + std::to_string(M.cols()) + "\n";
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out += ' ';
            out += M(i, j).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string to_json_string(const IntMatrix& M) {
    nlohmann::json j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    std::vector<std::string> entries;
    entries.reserve(M.rows() * M.cols());
    for (const auto& e : M.entries()) entries.push_back(e.get_str());
    j["entries"] = entries;
    return j.dump();
}

std::string to_inline_string(const IntMatrix& M) {
    std::string s = "[";
    for (std::size_t i = 0; i < M.rows(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) s += ',';
            s += M(i, j).get_str();
        }
        s += ']';
    }
    return s + "]";
}

}  // namespace latkit
