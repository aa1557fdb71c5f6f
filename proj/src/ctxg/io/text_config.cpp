#include "ctxg/io/text_config.hpp"

#include <cstdlib>

#include "ctxg/types.hpp"

namespace ctxg::io {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

ConfigDoc ConfigDoc::parse(const std::string& content, const std::string& origin) {
    ConfigDoc doc;
    doc.origin = origin;
    std::string section;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= content.size()) {
        size_t nl = content.find('\n', pos);
        std::string raw = content.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? content.size() + 1 : nl + 1;
        ++line_no;

        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": malformed section header: " + line);
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty section name");
            continue;
        }
        doc.lines.push_back({section, line, line_no});
    }
    return doc;
}

std::vector<ConfigLine> ConfigDoc::section(const std::string& name) const {
    std::vector<ConfigLine> out;
    for (const auto& l : lines)
        if (l.section == name) out.push_back(l);
    return out;
}

bool ConfigDoc::has_section(const std::string& name) const {
    for (const auto& l : lines)
        if (l.section == name) return true;
    return false;
}

bool split_key_value(const std::string& line, std::string& key, std::string& value) {
    int depth = 0;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '[' || c == '(') ++depth;
        else if (c == ']' || c == ')') --depth;
        else if (c == '=' && depth == 0) {
            key = trim(line.substr(0, i));
            value = trim(line.substr(i + 1));
            return !key.empty();
        }
    }
    return false;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || (line[i] == ',' && depth == 0)) {
            std::string f = trim(line.substr(start, i - start));
            if (!f.empty()) out.push_back(f);
            start = i + 1;
            continue;
        }
        const char c = line[i];
        if (c == '[' || c == '(') ++depth;
        else if (c == ']' || c == ')') --depth;
    }
    return out;
}

bool field_is_attr(const std::string& field) {
    int depth = 0;
    for (const char c : field) {
        if (c == '[' || c == '(') ++depth;
        else if (c == ']' || c == ')') --depth;
        else if (c == '=' && depth == 0) return true;
    }
    return false;
}

void parse_attr(const std::string& field, std::string& name, std::string& value) {
    if (!split_key_value(field, name, value))
        throw ConfigError("malformed attribute: '" + field + "'");
}

std::vector<std::string> parse_bracket_list(const std::string& value, const std::string& what) {
    std::string v = trim(value);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ConfigError(what + ": expected a bracketed list, got '" + value + "'");
    return split_fields(v.substr(1, v.size() - 2));
}

double parse_double(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError(what + ": not a number: '" + s + "'");
    return v;
}

long long parse_int(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError(what + ": not an integer: '" + s + "'");
    return v;
}

} // namespace ctxg::io
