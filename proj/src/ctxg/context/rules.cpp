#include "ctxg/context/rules.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>

#include "ctxg/io/fsio.hpp"
#include "ctxg/io/text_config.hpp"

namespace ctxg::context {

// ---- expression AST ----

struct Condition::Node {
    enum class Kind { And, Or, Not, Cmp, Alpha };
    enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

    struct Operand {
        enum class K { Dist, Inter, MidX, MidY, Num };
        K k = K::Num;
        ObjectClass c1 = ObjectClass::LeftGrasper;
        ObjectClass c2 = ObjectClass::LeftGrasper;
        double num = 0.0;
    };

    Kind kind;
    std::shared_ptr<const Node> a, b;   // And/Or children; Not child in a
    CmpOp cmp = CmpOp::Lt;
    Operand lhs, rhs;
    bool left_side = true;              // Alpha
};

namespace {

using Node = Condition::Node;
using NodePtr = std::shared_ptr<const Node>;

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* where) {
        if (!consume(c))
            throw ConfigError(std::string("condition: expected '") + c + "' " + where + " in '" + s + "'");
    }

    // identifier: letters, digits, underscore, starting with a letter
    bool ident(std::string& out) {
        skip_ws();
        size_t p = pos;
        if (p >= s.size() || !std::isalpha(static_cast<unsigned char>(s[p]))) return false;
        while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
        out = s.substr(pos, p - pos);
        pos = p;
        return true;
    }

    bool number(double& out) {
        skip_ws();
        const char* start = s.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) return false;
        // reject identifiers masquerading as numbers (strtod stops early)
        pos += static_cast<size_t>(end - start);
        out = v;
        return true;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex(text) {}

    ObjectClass parse_class() {
        std::string id;
        if (!lex.ident(id)) throw ConfigError("condition: expected object class in '" + lex.s + "'");
        ObjectClass c;
        if (!try_parse_object_symbol(id, c))
            throw ConfigError("condition: unknown object symbol '" + id + "' in '" + lex.s + "'");
        return c;
    }

    Node::CmpOp parse_cmp_op() {
        lex.skip_ws();
        const std::string& s = lex.s;
        size_t& p = lex.pos;
        if (p < s.size()) {
            if (s[p] == '<') {
                ++p;
                if (p < s.size() && s[p] == '=') { ++p; return Node::CmpOp::Le; }
                return Node::CmpOp::Lt;
            }
            if (s[p] == '>') {
                ++p;
                if (p < s.size() && s[p] == '=') { ++p; return Node::CmpOp::Ge; }
                return Node::CmpOp::Gt;
            }
            if (s[p] == '=') {
                ++p;
                if (p < s.size() && s[p] == '=') ++p;
                return Node::CmpOp::Eq;
            }
            if (s[p] == '!' && p + 1 < s.size() && s[p + 1] == '=') {
                p += 2;
                return Node::CmpOp::Ne;
            }
        }
        throw ConfigError("condition: expected comparison operator in '" + s + "'");
    }

    // D(a,b) | Inter(a,b) | Class.x | Class.y | number
    Node::Operand parse_operand() {
        Node::Operand op;
        lex.skip_ws();
        const char c = lex.peek();
        if (c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
            if (!lex.number(op.num))
                throw ConfigError("condition: bad number in '" + lex.s + "'");
            op.k = Node::Operand::K::Num;
            return op;
        }
        std::string id;
        if (!lex.ident(id)) throw ConfigError("condition: expected operand in '" + lex.s + "'");
        if (id == "D" || id == "Inter") {
            lex.expect('(', "after function name");
            op.c1 = parse_class();
            lex.expect(',', "between function arguments");
            op.c2 = parse_class();
            lex.expect(')', "after function arguments");
            op.k = id == "D" ? Node::Operand::K::Dist : Node::Operand::K::Inter;
            return op;
        }
        ObjectClass cls;
        if (!try_parse_object_symbol(id, cls))
            throw ConfigError("condition: unknown symbol '" + id + "' in '" + lex.s + "'");
        lex.expect('.', "after object symbol");
        std::string axis;
        if (!lex.ident(axis) || (axis != "x" && axis != "y"))
            throw ConfigError("condition: expected .x or .y in '" + lex.s + "'");
        op.k = axis == "x" ? Node::Operand::K::MidX : Node::Operand::K::MidY;
        op.c1 = cls;
        return op;
    }

    NodePtr parse_primary() {
        if (lex.consume('(')) {
            NodePtr e = parse_or();
            lex.expect(')', "to close group");
            return e;
        }
        if (lex.consume('!')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Not;
            n->a = parse_primary();
            return n;
        }
        // alpha(...) or a comparison
        {
            const size_t save_pos = lex.pos;
            std::string id;
            if (lex.ident(id) && id == "alpha") {
                lex.expect('(', "after alpha");
                std::string side;
                if (!lex.ident(side)) throw ConfigError("condition: expected L or R in alpha() in '" + lex.s + "'");
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::Alpha;
                if (side == "L" || side == "left") n->left_side = true;
                else if (side == "R" || side == "right") n->left_side = false;
                else throw ConfigError("condition: alpha side must be L or R, got '" + side + "'");
                lex.expect(')', "after alpha side");
                return n;
            }
            lex.pos = save_pos;
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Cmp;
        n->lhs = parse_operand();
        n->cmp = parse_cmp_op();
        n->rhs = parse_operand();
        return n;
    }

    NodePtr parse_and() {
        NodePtr left = parse_primary();
        for (;;) {
            lex.skip_ws();
            if (lex.peek() != '&') return left;
            lex.consume('&');
            lex.consume('&'); // tolerate &&
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::And;
            n->a = left;
            n->b = parse_primary();
            left = n;
        }
    }

    NodePtr parse_or() {
        NodePtr left = parse_and();
        for (;;) {
            lex.skip_ws();
            if (lex.peek() != '|') return left;
            lex.consume('|');
            lex.consume('|'); // tolerate ||
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Or;
            n->a = left;
            n->b = parse_and();
            left = n;
        }
    }
};

std::optional<double> eval_operand(const Node::Operand& op, const FeatureVector& fv) {
    switch (op.k) {
        case Node::Operand::K::Num:
            return op.num;
        case Node::Operand::K::Dist:
            return fv.distance(op.c1, op.c2);
        case Node::Operand::K::Inter:
            return fv.intersection(op.c1, op.c2);
        case Node::Operand::K::MidX: {
            const auto m = fv.midpoint(op.c1);
            if (!m) return std::nullopt;
            return m->x;
        }
        case Node::Operand::K::MidY: {
            const auto m = fv.midpoint(op.c1);
            if (!m) return std::nullopt;
            return m->y;
        }
    }
    return std::nullopt;
}

bool eval_node(const Node& n, const FeatureVector& fv) {
    switch (n.kind) {
        case Node::Kind::And:
            return eval_node(*n.a, fv) && eval_node(*n.b, fv);
        case Node::Kind::Or:
            return eval_node(*n.a, fv) || eval_node(*n.b, fv);
        case Node::Kind::Not:
            return !eval_node(*n.a, fv);
        case Node::Kind::Alpha:
            return n.left_side ? fv.alpha_left : fv.alpha_right;
        case Node::Kind::Cmp: {
            const auto l = eval_operand(n.lhs, fv);
            const auto r = eval_operand(n.rhs, fv);
            if (!l || !r) return false; // missing midpoint
            switch (n.cmp) {
                case Node::CmpOp::Lt: return *l < *r;
                case Node::CmpOp::Le: return *l <= *r;
                case Node::CmpOp::Gt: return *l > *r;
                case Node::CmpOp::Ge: return *l >= *r;
                case Node::CmpOp::Eq: return *l == *r;
                case Node::CmpOp::Ne: return *l != *r;
            }
        }
    }
    return false;
}

void collect_operand(const Node::Operand& op, Requirements& req) {
    switch (op.k) {
        case Node::Operand::K::Dist:
            req.distances.insert(norm_pair(op.c1, op.c2));
            break;
        case Node::Operand::K::Inter:
            req.intersections.insert(norm_pair(op.c1, op.c2));
            break;
        case Node::Operand::K::MidX:
        case Node::Operand::K::MidY:
            req.midpoints.insert(op.c1);
            break;
        case Node::Operand::K::Num:
            break;
    }
}

void collect_node(const Node& n, Requirements& req) {
    switch (n.kind) {
        case Node::Kind::And:
        case Node::Kind::Or:
            collect_node(*n.a, req);
            collect_node(*n.b, req);
            break;
        case Node::Kind::Not:
            collect_node(*n.a, req);
            break;
        case Node::Kind::Alpha:
            (n.left_side ? req.alpha_left : req.alpha_right) = true;
            break;
        case Node::Kind::Cmp:
            collect_operand(n.lhs, req);
            collect_operand(n.rhs, req);
            break;
    }
}

void collect_classes(const Node& n, std::set<ObjectClass>& out) {
    switch (n.kind) {
        case Node::Kind::And:
        case Node::Kind::Or:
            collect_classes(*n.a, out);
            collect_classes(*n.b, out);
            break;
        case Node::Kind::Not:
            collect_classes(*n.a, out);
            break;
        case Node::Kind::Alpha:
            break;
        case Node::Kind::Cmp:
            for (const auto* op : {&n.lhs, &n.rhs}) {
                if (op->k == Node::Operand::K::Num) continue;
                out.insert(op->c1);
                if (op->k == Node::Operand::K::Dist || op->k == Node::Operand::K::Inter)
                    out.insert(op->c2);
            }
            break;
    }
}

} // namespace

Condition Condition::parse(const std::string& text) {
    Parser p(text);
    Condition c;
    c.root_ = p.parse_or();
    if (!p.lex.eof())
        throw ConfigError("condition: trailing content after expression in '" + text + "'");
    c.text_ = text;
    return c;
}

bool Condition::eval(const FeatureVector& fv) const {
    if (!root_) throw ValidationError("evaluating an empty condition");
    return eval_node(*root_, fv);
}

void Condition::collect(Requirements& req) const {
    if (root_) collect_node(*root_, req);
}

// ---- rule set ----

const char* variable_section_name(int idx) {
    switch (idx) {
        case 0: return "left_hold";
        case 1: return "left_contact";
        case 2: return "right_hold";
        case 3: return "right_contact";
        case 4: return "fifth";
    }
    return "?";
}

namespace {

const std::set<ObjectClass>& allowed_classes(Task t) {
    static const std::set<ObjectClass> suturing{
        ObjectClass::LeftGrasper, ObjectClass::RightGrasper, ObjectClass::Needle,
        ObjectClass::Thread, ObjectClass::TissuePoints};
    static const std::set<ObjectClass> needle_passing{
        ObjectClass::LeftGrasper, ObjectClass::RightGrasper, ObjectClass::Needle,
        ObjectClass::Thread, ObjectClass::Ring};
    static const std::set<ObjectClass> knot_tying{
        ObjectClass::LeftGrasper, ObjectClass::RightGrasper, ObjectClass::Thread};
    switch (t) {
        case Task::Suturing: return suturing;
        case Task::NeedlePassing: return needle_passing;
        case Task::KnotTying: return knot_tying;
    }
    return suturing;
}

} // namespace

RuleSet parse_rules(const std::string& content, const std::string& origin) {
    const io::ConfigDoc doc = io::ConfigDoc::parse(content, origin);
    RuleSet rs;
    bool saw_task = false;

    for (const auto& l : doc.lines) {
        const std::string where = origin + ":" + std::to_string(l.line_no);
        if (l.section.empty()) {
            std::string key, value;
            if (!io::split_key_value(l.text, key, value) || key != "task")
                throw ConfigError(where + ": expected 'task = <name>' before sections");
            rs.task = parse_task(value);
            saw_task = true;
            continue;
        }
        if (l.section == "thresholds") {
            std::string key, value;
            if (!io::split_key_value(l.text, key, value))
                throw ConfigError(where + ": expected key = value");
            if (key == "jaw_open_px") rs.thresholds.jaw_open_px = io::parse_double(value, key);
            else if (key == "min_area_px2") rs.thresholds.min_area_px2 = io::parse_double(value, key);
            else if (key == "rdp_epsilon_px") rs.thresholds.rdp_epsilon_px = io::parse_double(value, key);
            else if (key == "mode_window_frames") rs.thresholds.mode_window_frames = static_cast<int>(io::parse_int(value, key));
            else throw ConfigError(where + ": unknown threshold '" + key + "'");
            continue;
        }
        if (l.section == "encodings") {
            // Documentation of what each value denotes; syntax-checked only.
            std::string key, value;
            if (!io::split_key_value(l.text, key, value))
                throw ConfigError(where + ": expected object = value");
            parse_object_class(key);
            io::parse_int(value, key);
            continue;
        }

        int var = -1;
        for (int i = 0; i < 5; ++i)
            if (l.section == variable_section_name(i)) var = i;
        if (var < 0) throw ConfigError(where + ": unknown section [" + l.section + "]");

        const auto fields = io::split_fields(l.text);
        if (fields.empty() || io::field_is_attr(fields[0]))
            throw ConfigError(where + ": rule must start with its value");
        Rule rule;
        rule.value = static_cast<int>(io::parse_int(fields[0], where + ": rule value"));
        if (rule.value < 0 || rule.value > 9)
            throw ConfigError(where + ": rule value must be a single digit");
        bool saw_when = false;
        for (size_t i = 1; i < fields.size(); ++i) {
            std::string name, value;
            io::parse_attr(fields[i], name, value);
            if (name == "when") {
                std::string expr = io::trim(value);
                if (expr.size() >= 2 && expr.front() == '[' && expr.back() == ']')
                    expr = io::trim(expr.substr(1, expr.size() - 2));
                try {
                    rule.cond = Condition::parse(expr);
                } catch (const ConfigError& e) {
                    throw ConfigError(where + ": " + e.what());
                }
                saw_when = true;
            } else if (name == "origin") {
                rule.origin = value;
            } else {
                throw ConfigError(where + ": unknown rule attribute '" + name + "'");
            }
        }
        if (!saw_when) throw ConfigError(where + ": rule needs when=[...]");
        rs.variables[static_cast<size_t>(var)].push_back(std::move(rule));
    }

    if (!saw_task) throw ConfigError(origin + ": task missing");
    if (rs.thresholds.jaw_open_px <= 0) throw ConfigError(origin + ": jaw_open_px must be positive");
    if (rs.thresholds.min_area_px2 < 0) throw ConfigError(origin + ": min_area_px2 must be >= 0");
    if (rs.thresholds.rdp_epsilon_px < 0) throw ConfigError(origin + ": rdp_epsilon_px must be >= 0");
    if (rs.thresholds.mode_window_frames < 1) throw ConfigError(origin + ": mode_window_frames must be >= 1");

    const auto& allowed = allowed_classes(rs.task);
    for (const ObjectClass c : rs.referenced_classes()) {
        if (!allowed.count(c))
            throw ConfigError(origin + ": rules reference class " + object_class_symbol(c) +
                              " which the " + task_name(rs.task) + " task does not use");
    }
    return rs;
}

RuleSet load_rules(const std::filesystem::path& p) {
    return parse_rules(io::read_file(p), p.string());
}

Requirements RuleSet::requirements() const {
    Requirements req;
    for (const auto& var : variables)
        for (const Rule& r : var) r.cond.collect(req);
    return req;
}

std::set<int> RuleSet::value_set(int variable) const {
    std::set<int> vals{0};
    for (const Rule& r : variables[static_cast<size_t>(variable)]) vals.insert(r.value);
    return vals;
}

std::set<ObjectClass> RuleSet::referenced_classes() const {
    std::set<ObjectClass> out;
    for (const auto& var : variables)
        for (const Rule& r : var) {
            Requirements req;
            r.cond.collect(req);
            for (const auto& pr : req.distances) {
                out.insert(pr.first);
                out.insert(pr.second);
            }
            for (const auto& pr : req.intersections) {
                out.insert(pr.first);
                out.insert(pr.second);
            }
            for (const ObjectClass c : req.midpoints) out.insert(c);
        }
    return out;
}

ContextState infer_state(const RuleSet& rules, const FeatureVector& fv) {
    ContextState st;
    for (int v = 0; v < 5; ++v) {
        uint8_t value = 0;
        for (const Rule& r : rules.variables[static_cast<size_t>(v)]) {
            if (r.cond.eval(fv)) {
                value = static_cast<uint8_t>(r.value);
                break;
            }
        }
        st[static_cast<size_t>(v)] = value;
    }
    return st;
}

} // namespace ctxg::context
