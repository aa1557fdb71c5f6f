#include "ctxg/types.hpp"

namespace ctxg {

Task parse_task(const std::string& name) {
    if (name == "Suturing" || name == "suturing") return Task::Suturing;
    if (name == "Needle_Passing" || name == "NeedlePassing" || name == "needle_passing")
        return Task::NeedlePassing;
    if (name == "Knot_Tying" || name == "KnotTying" || name == "knot_tying")
        return Task::KnotTying;
    throw ConfigError("unknown task name: '" + name + "'");
}

const char* task_name(Task t) {
    switch (t) {
        case Task::Suturing: return "Suturing";
        case Task::NeedlePassing: return "Needle_Passing";
        case Task::KnotTying: return "Knot_Tying";
    }
    return "?";
}

ObjectClass parse_object_class(const std::string& name) {
    if (name == "left_grasper") return ObjectClass::LeftGrasper;
    if (name == "right_grasper") return ObjectClass::RightGrasper;
    if (name == "needle") return ObjectClass::Needle;
    if (name == "thread") return ObjectClass::Thread;
    if (name == "ring") return ObjectClass::Ring;
    if (name == "tissue_points") return ObjectClass::TissuePoints;
    throw ConfigError("unknown object class: '" + name + "'");
}

const char* object_class_name(ObjectClass c) {
    switch (c) {
        case ObjectClass::LeftGrasper: return "left_grasper";
        case ObjectClass::RightGrasper: return "right_grasper";
        case ObjectClass::Needle: return "needle";
        case ObjectClass::Thread: return "thread";
        case ObjectClass::Ring: return "ring";
        case ObjectClass::TissuePoints: return "tissue_points";
    }
    return "?";
}

const char* object_class_symbol(ObjectClass c) {
    switch (c) {
        case ObjectClass::LeftGrasper: return "LG";
        case ObjectClass::RightGrasper: return "RG";
        case ObjectClass::Needle: return "N";
        case ObjectClass::Thread: return "T";
        case ObjectClass::Ring: return "R";
        case ObjectClass::TissuePoints: return "Ts";
    }
    return "?";
}

bool try_parse_object_symbol(const std::string& sym, ObjectClass& out) {
    for (int i = 0; i < kObjectClassCount; ++i) {
        auto c = static_cast<ObjectClass>(i);
        if (sym == object_class_symbol(c)) {
            out = c;
            return true;
        }
    }
    return false;
}

std::string ContextState::code() const {
    std::string s(5, '0');
    for (int i = 0; i < 5; ++i) {
        if (v[i] > 9) throw ValidationError("context variable out of single digit range");
        s[i] = static_cast<char>('0' + v[i]);
    }
    return s;
}

ContextState ContextState::from_code(const std::string& code) {
    if (code.size() != 5) throw ValidationError("context code must have exactly 5 digits: '" + code + "'");
    ContextState st;
    for (int i = 0; i < 5; ++i) {
        if (code[i] < '0' || code[i] > '9')
            throw ValidationError("context code must be numeric: '" + code + "'");
        st.v[i] = static_cast<uint8_t>(code[i] - '0');
    }
    return st;
}

const char* context_variable_name(int idx) {
    switch (idx) {
        case 0: return "Left Hold";
        case 1: return "Left Contact";
        case 2: return "Right Hold";
        case 3: return "Right Contact";
        case 4: return "Needle/Knot";
    }
    return "?";
}

} // namespace ctxg
