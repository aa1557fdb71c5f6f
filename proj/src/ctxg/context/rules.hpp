#pragma once

#include <filesystem>
#include <memory>

#include "ctxg/context/features.hpp"
#include "ctxg/types.hpp"

namespace ctxg::context {

// Boolean condition over frame features, e.g.
//   D(LG,N) < 1 & !alpha(L)
//   (Inter(Ts,N) = 0 | N.x >= Ts.x) & (D(RG,T) > 1 | D(LG,N) > 1)
// Atoms: D(A,B) and Inter(A,B) compared to numbers, midpoint coordinate
// comparisons (A.x, A.y against another midpoint or a number), and alpha(L) /
// alpha(R) for jaws-open. Operators ! & | with parentheses; a comparison
// against a missing midpoint is false.
class Condition {
  public:
    static Condition parse(const std::string& text);

    bool eval(const FeatureVector& fv) const;
    void collect(Requirements& req) const;
    const std::string& text() const { return text_; }

    struct Node;

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

struct Rule {
    int value = 0;
    Condition cond;
    std::string origin;   // provenance note carried from the config, may be empty
};

struct Thresholds {
    double jaw_open_px = 18.0;
    double min_area_px2 = 15.0;
    double rdp_epsilon_px = 1.5;
    int mode_window_frames = 10;
};

// Per-variable rule lists for one task. Within a variable the first matching
// rule wins; no match means 0.
struct RuleSet {
    Task task = Task::Suturing;
    std::array<std::vector<Rule>, 5> variables;
    Thresholds thresholds;

    Requirements requirements() const;
    // Values this variable can take: 0 plus every rule value.
    std::set<int> value_set(int variable) const;
    // Classes any rule references.
    std::set<ObjectClass> referenced_classes() const;
};

RuleSet parse_rules(const std::string& content, const std::string& origin);
RuleSet load_rules(const std::filesystem::path& p);

// Evaluate all five variables, first match wins, default 0.
ContextState infer_state(const RuleSet& rules, const FeatureVector& fv);

// Config-file section name for a variable index.
const char* variable_section_name(int idx);

} // namespace ctxg::context
