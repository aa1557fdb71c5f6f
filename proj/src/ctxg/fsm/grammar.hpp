#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>

#include "ctxg/types.hpp"

namespace ctxg::fsm {

// One context-triggered edge. Among a state's outgoing edges a context may
// appear in at most one edge per priority level; lower priority wins.
struct Transition {
    std::string from;
    std::string to;
    std::set<std::string> contexts;   // 5-digit codes
    int priority = 0;
    std::string origin;               // provenance note from the config
};

// Fallback edge taken when a state has been held longer than `seconds`.
struct DurationRule {
    std::string from;
    double seconds = 0.0;
    std::string to;
};

struct Grammar {
    Task task = Task::Suturing;
    std::string start_state = "Start";
    std::vector<std::string> states;                 // includes the start state
    std::vector<Transition> transitions;             // config order
    std::vector<DurationRule> durations;             // at most one per state
    std::string terminal_label;                      // appended after the last sample; may be empty
    std::set<std::string> excluded;                  // labels rejected in transcripts
    std::map<std::string, std::vector<std::string>> groupings; // emission sequence per state

    bool has_state(const std::string& s) const;
    const DurationRule* duration_for(const std::string& state) const;
    // Unique target for (state, context); nullopt when nothing fires.
    std::optional<std::string> context_target(const std::string& state, const std::string& ctx) const;

    // Structural checks; throws ConfigError.
    void validate() const;
};

Grammar parse_grammar(const std::string& content, const std::string& origin);
Grammar load_grammar(const std::filesystem::path& p);

} // namespace ctxg::fsm
