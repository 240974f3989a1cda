#pragma once

#include <cctype>
#include <string>
#include <vector>

namespace hermann::testing {

// Minimal well-formedness check: balanced and properly nested elements, quoted
// attributes, no stray '<' or '&' in text. Returns an empty string when fine.
inline std::string xml_problem(const std::string& s) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    auto name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':' || c == '_'; };
    while (i < s.size()) {
        if (s[i] == '&') {
            const std::size_t semi = s.find(';', i);
            if (semi == std::string::npos || semi - i > 8) return "bare & at " + std::to_string(i);
            i = semi + 1;
            continue;
        }
        if (s[i] != '<') {
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) return "text outside root";
            ++i;
            continue;
        }
        if (s.compare(i, 5, "<?xml") == 0) {
            const std::size_t e = s.find("?>", i);
            if (e == std::string::npos) return "unterminated declaration";
            i = e + 2;
            continue;
        }
        if (s.compare(i, 2, "</") == 0) {
            std::size_t j = i + 2;
            while (j < s.size() && name_char(s[j])) ++j;
            const std::string name = s.substr(i + 2, j - i - 2);
            if (j >= s.size() || s[j] != '>') return "bad closing tag " + name;
            if (stack.empty() || stack.back() != name) return "mismatched </" + name + ">";
            stack.pop_back();
            i = j + 1;
            continue;
        }
        std::size_t j = i + 1;
        while (j < s.size() && name_char(s[j])) ++j;
        const std::string name = s.substr(i + 1, j - i - 1);
        if (name.empty()) return "empty tag name at " + std::to_string(i);
        if (stack.empty() && root_seen) return "second root element";
        // attributes
        for (;;) {
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            if (j >= s.size()) return "unterminated tag " + name;
            if (s[j] == '>') {
                stack.push_back(name);
                root_seen = true;
                ++j;
                break;
            }
            if (s.compare(j, 2, "/>") == 0) {
                root_seen = true;
                j += 2;
                break;
            }
            const std::size_t a = j;
            while (j < s.size() && name_char(s[j])) ++j;
            if (j == a || j >= s.size() || s[j] != '=') return "bad attribute in " + name;
            ++j;
            if (j >= s.size() || s[j] != '"') return "unquoted attribute in " + name;
            const std::size_t close = s.find('"', j + 1);
            if (close == std::string::npos) return "unterminated attribute in " + name;
            const std::string value = s.substr(j + 1, close - j - 1);
            if (value.find('<') != std::string::npos) return "'<' in attribute of " + name;
            j = close + 1;
        }
        i = j;
    }
    if (!stack.empty()) return "unclosed <" + stack.back() + ">";
    if (!root_seen) return "no root element";
    return {};
}

inline std::size_t count_occurrences(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace hermann::testing
