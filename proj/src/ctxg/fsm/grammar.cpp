#include "ctxg/fsm/grammar.hpp"

#include <algorithm>

#include "ctxg/io/fsio.hpp"
#include "ctxg/io/text_config.hpp"

namespace ctxg::fsm {

namespace {

void check_code(const std::string& code, const std::string& origin, int line_no) {
    if (code.size() != 5 || code.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError(origin + ":" + std::to_string(line_no) +
                          ": context code must be 5 digits, got '" + code + "'");
    }
}

} // namespace

bool Grammar::has_state(const std::string& s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
}

const DurationRule* Grammar::duration_for(const std::string& state) const {
    for (const auto& d : durations) {
        if (d.from == state) return &d;
    }
    return nullptr;
}

std::optional<std::string> Grammar::context_target(const std::string& state,
                                                   const std::string& ctx) const {
    const Transition* best = nullptr;
    for (const auto& t : transitions) {
        if (t.from != state || t.contexts.count(ctx) == 0) continue;
        if (!best || t.priority < best->priority) best = &t;
    }
    if (!best) return std::nullopt;
    return best->to;
}

void Grammar::validate() const {
    if (states.empty()) throw ConfigError("grammar: no states declared");
    std::set<std::string> seen;
    for (const auto& s : states) {
        if (s.empty()) throw ConfigError("grammar: empty state name");
        if (!seen.insert(s).second) throw ConfigError("grammar: duplicate state '" + s + "'");
    }
    if (seen.count(start_state) == 0) {
        throw ConfigError("grammar: start state '" + start_state + "' not declared");
    }
    if (!terminal_label.empty() && seen.count(terminal_label) != 0) {
        throw ConfigError("grammar: terminal label '" + terminal_label +
                          "' must not also be a state");
    }
    for (const auto& e : excluded) {
        if (seen.count(e) != 0) {
            throw ConfigError("grammar: excluded label '" + e + "' is a declared state");
        }
        if (e == terminal_label) {
            throw ConfigError("grammar: terminal label '" + e + "' cannot be excluded");
        }
    }

    // Ambiguity: within one source state, a context may fire at most one
    // transition per priority level.
    std::map<std::string, std::map<std::string, std::set<int>>> fired; // from -> ctx -> priorities
    for (const auto& t : transitions) {
        if (seen.count(t.from) == 0) {
            throw ConfigError("grammar: transition from unknown state '" + t.from + "'");
        }
        if (seen.count(t.to) == 0) {
            throw ConfigError("grammar: transition to unknown state '" + t.to + "'");
        }
        if (t.from == t.to) {
            throw ConfigError("grammar: self transition on '" + t.from + "'");
        }
        if (t.contexts.empty()) {
            throw ConfigError("grammar: transition " + t.from + " -> " + t.to +
                              " has no trigger contexts");
        }
        for (const auto& c : t.contexts) {
            auto& prios = fired[t.from][c];
            if (!prios.insert(t.priority).second) {
                throw ConfigError("grammar: context " + c + " fires more than one transition "
                                  "out of '" + t.from + "' at priority " +
                                  std::to_string(t.priority));
            }
        }
    }

    std::set<std::string> dur_from;
    for (const auto& d : durations) {
        if (seen.count(d.from) == 0) {
            throw ConfigError("grammar: duration rule on unknown state '" + d.from + "'");
        }
        if (seen.count(d.to) == 0) {
            throw ConfigError("grammar: duration rule targets unknown state '" + d.to + "'");
        }
        if (d.from == d.to) {
            throw ConfigError("grammar: duration self transition on '" + d.from + "'");
        }
        if (!(d.seconds > 0.0)) {
            throw ConfigError("grammar: duration for '" + d.from + "' must be positive");
        }
        if (!dur_from.insert(d.from).second) {
            throw ConfigError("grammar: multiple duration rules for '" + d.from + "'");
        }
    }

    for (const auto& [state, seq] : groupings) {
        if (seen.count(state) == 0) {
            throw ConfigError("grammar: grouping for unknown state '" + state + "'");
        }
        if (seq.empty()) {
            throw ConfigError("grammar: empty grouping for '" + state + "'");
        }
    }
}

Grammar parse_grammar(const std::string& content, const std::string& origin) {
    const io::ConfigDoc doc = io::ConfigDoc::parse(content, origin);
    Grammar g;

    for (const auto& line : doc.section("")) {
        const std::string where = origin + ":" + std::to_string(line.line_no);
        std::string key, value;
        if (!io::split_key_value(line.text, key, value)) {
            throw ConfigError(where + ": expected 'key = value'");
        }
        if (key == "task") {
            g.task = parse_task(value);
        } else if (key == "start") {
            g.start_state = value;
        } else if (key == "terminal") {
            g.terminal_label = value;
        } else if (key == "excluded") {
            for (const auto& e : io::parse_bracket_list(value, where)) {
                g.excluded.insert(e);
            }
        } else {
            throw ConfigError(where + ": unknown grammar key '" + key + "'");
        }
    }

    for (const auto& line : doc.section("states")) {
        g.states.push_back(line.text);
    }

    for (const auto& line : doc.section("transitions")) {
        const std::string where = origin + ":" + std::to_string(line.line_no);
        const auto fields = io::split_fields(line.text);
        if (fields.size() < 3) {
            throw ConfigError(where + ": transition needs 'from, to, contexts=[...]'");
        }
        Transition t;
        t.from = fields[0];
        t.to = fields[1];
        bool have_contexts = false;
        for (size_t i = 2; i < fields.size(); ++i) {
            std::string k, v;
            io::parse_attr(fields[i], k, v);
            if (k == "contexts") {
                for (const auto& c : io::parse_bracket_list(v, where)) {
                    check_code(c, origin, line.line_no);
                    if (!t.contexts.insert(c).second) {
                        throw ConfigError(where + ": duplicate context " + c);
                    }
                }
                have_contexts = true;
            } else if (k == "priority") {
                t.priority = static_cast<int>(io::parse_int(v, where + ": priority"));
            } else if (k == "origin") {
                t.origin = v;
            } else {
                throw ConfigError(where + ": unknown transition attribute '" + k + "'");
            }
        }
        if (!have_contexts) {
            throw ConfigError(where + ": transition missing contexts=[...]");
        }
        g.transitions.push_back(std::move(t));
    }

    for (const auto& line : doc.section("durations")) {
        const std::string where = origin + ":" + std::to_string(line.line_no);
        const auto fields = io::split_fields(line.text);
        if (fields.size() != 3) {
            throw ConfigError(where + ": duration needs 'from, seconds, to'");
        }
        DurationRule d;
        d.from = fields[0];
        d.seconds = io::parse_double(fields[1], where + ": seconds");
        d.to = fields[2];
        g.durations.push_back(std::move(d));
    }

    for (const auto& line : doc.section("groupings")) {
        const std::string where = origin + ":" + std::to_string(line.line_no);
        const auto fields = io::split_fields(line.text);
        if (fields.size() != 2) {
            throw ConfigError(where + ": grouping needs 'state, sequence=[...]'");
        }
        std::string k, v;
        io::parse_attr(fields[1], k, v);
        if (k != "sequence") {
            throw ConfigError(where + ": grouping attribute must be sequence=[...]");
        }
        std::vector<std::string> seq = io::parse_bracket_list(v, where);
        for (const auto& c : seq) check_code(c, origin, line.line_no);
        if (!g.groupings.emplace(fields[0], std::move(seq)).second) {
            throw ConfigError(where + ": duplicate grouping for '" + fields[0] + "'");
        }
    }

    g.validate();
    return g;
}

Grammar load_grammar(const std::filesystem::path& p) {
    return parse_grammar(io::read_file(p), p.filename().string());
}

} // namespace ctxg::fsm
