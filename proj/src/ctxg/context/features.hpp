#pragma once

#include <map>
#include <optional>
#include <set>

#include "ctxg/geom/polygon.hpp"
#include "ctxg/types.hpp"

namespace ctxg::context {

using ClassPair = std::pair<ObjectClass, ObjectClass>;

inline ClassPair norm_pair(ObjectClass a, ObjectClass b) {
    return a <= b ? ClassPair{a, b} : ClassPair{b, a};
}

// What a rule set needs computed per frame. Feature extraction computes
// exactly these and nothing else.
struct Requirements {
    std::set<ClassPair> distances;
    std::set<ClassPair> intersections;
    std::set<ObjectClass> midpoints;
    bool alpha_left = false;
    bool alpha_right = false;
};

// Geometry measurements for one frame. Distances are +infinity when either
// object has no components; midpoints are absent then.
struct FeatureVector {
    std::map<ClassPair, double> distances;
    std::map<ClassPair, double> intersections;
    std::map<ObjectClass, Point> midpoints;
    bool alpha_left = true;    // true = jaws open
    bool alpha_right = true;

    double distance(ObjectClass a, ObjectClass b) const;
    double intersection(ObjectClass a, ObjectClass b) const;
    std::optional<Point> midpoint(ObjectClass c) const;
};

using ShapeMap = std::map<ObjectClass, geom::ObjectShape>;

// Jaw-end separation against the open/closed threshold: closer than
// jaw_open_px means closed.
bool grasper_open(const Point& a, const Point& b, double jaw_open_px);

FeatureVector compute_features(const ShapeMap& shapes, const Requirements& req,
                               bool alpha_left, bool alpha_right);

} // namespace ctxg::context
