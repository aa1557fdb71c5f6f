#pragma once

#include <string>
#include <vector>

namespace ctxg::io {

// Line-oriented config format shared by manifests, grammars, and rule files:
//   # comment (also allowed after content)
//   key = value            before any section or inside one
//   [section]
//   free-form entry lines interpreted by the consumer
// Entry fields are comma separated; brackets protect nested commas, e.g.
//   G1, G5, contexts=[00200, 00202], origin=site-b-review

struct ConfigLine {
    std::string section;   // "" before the first section header
    std::string text;      // trimmed, comments stripped, never empty
    int line_no = 0;       // 1-based, for error messages
};

struct ConfigDoc {
    std::string origin;    // file name for error messages
    std::vector<ConfigLine> lines;

    static ConfigDoc parse(const std::string& content, const std::string& origin);

    // All lines of one section, in order.
    std::vector<ConfigLine> section(const std::string& name) const;
    bool has_section(const std::string& name) const;
};

std::string trim(const std::string& s);

// "key = value" split; false when there is no '=' outside brackets.
bool split_key_value(const std::string& line, std::string& key, std::string& value);

// Top-level comma split; commas inside [] or () do not split.
std::vector<std::string> split_fields(const std::string& line);

// "name=[a, b, c]" or "name=value" field accessors.
bool field_is_attr(const std::string& field);
void parse_attr(const std::string& field, std::string& name, std::string& value);

// Strip surrounding [] and split the contents on commas; "[]" gives {}.
std::vector<std::string> parse_bracket_list(const std::string& value, const std::string& what);

double parse_double(const std::string& s, const std::string& what);
long long parse_int(const std::string& s, const std::string& what);

} // namespace ctxg::io
