#pragma once

// Line/token helpers shared by the file-format parsers.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "domset/error.hpp"

namespace domset::detail {

struct Line {
    std::size_t number = 0;
    std::vector<std::string_view> tokens;
};

/// Splits text into whitespace-tokenized lines, skipping blank lines.
inline std::vector<Line> tokenize_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

inline bool try_parse_int(std::string_view token, std::int64_t& out) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

inline std::string bad_int_message(std::string_view token, std::size_t line, std::string_view what) {
    return "line " + std::to_string(line) + ": expected integer " + std::string(what) + ", got '" +
           std::string(token) + "'";
}

inline std::int64_t parse_int(std::string_view token, std::size_t line, std::string_view what) {
    std::int64_t value = 0;
    if (!try_parse_int(token, value)) throw InputError(bad_int_message(token, line, what));
    return value;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace domset::detail
