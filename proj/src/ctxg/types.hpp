#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxg {

// Problems with configuration inputs: manifests, grammars, rule files, flags.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with trial data: missing or malformed masks, annotations, transcripts.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Outputs or inputs that violate a structural contract (ordering, ranges, labels).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Task : uint8_t { Suturing, NeedlePassing, KnotTying };

Task parse_task(const std::string& name);
const char* task_name(Task t);

// Object classes that can appear in a mask stream or a rule expression.
enum class ObjectClass : uint8_t {
    LeftGrasper,
    RightGrasper,
    Needle,
    Thread,
    Ring,
    TissuePoints,
};
inline constexpr int kObjectClassCount = 6;

ObjectClass parse_object_class(const std::string& name);
// Canonical config-file spelling (left_grasper, right_grasper, ...).
const char* object_class_name(ObjectClass c);
// Short spelling used in rule expressions (LG, RG, N, T, R, Ts).
const char* object_class_symbol(ObjectClass c);
bool try_parse_object_symbol(const std::string& sym, ObjectClass& out);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Binary pixel grid for one object class in one frame. data holds 0 or 1 per
// pixel, row major.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;

    Mask() = default;
    Mask(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h, 0) {}

    uint8_t at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
    void set(int x, int y, uint8_t v) { data[static_cast<size_t>(y) * width + x] = v; }
    size_t pixel_count() const { return data.size(); }
};

// One state vector sample: hold/contact per arm plus the task specific fifth
// variable, each a single digit.
struct ContextState {
    std::array<uint8_t, 5> v{};

    uint8_t& operator[](size_t i) { return v[i]; }
    uint8_t operator[](size_t i) const { return v[i]; }
    bool operator==(const ContextState&) const = default;

    std::string code() const;                       // "20020"
    static ContextState from_code(const std::string& code);
};

// Column labels in reporting order.
const char* context_variable_name(int idx);

} // namespace ctxg
