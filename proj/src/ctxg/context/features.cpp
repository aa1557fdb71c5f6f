#include "ctxg/context/features.hpp"

#include <cmath>
#include <limits>

#include "ctxg/geom/distance.hpp"
#include "ctxg/geom/raster.hpp"

namespace ctxg::context {

namespace {

const geom::ObjectShape kEmptyShape;

const geom::ObjectShape& shape_of(const ShapeMap& shapes, ObjectClass c) {
    auto it = shapes.find(c);
    return it == shapes.end() ? kEmptyShape : it->second;
}

} // namespace

double FeatureVector::distance(ObjectClass a, ObjectClass b) const {
    auto it = distances.find(norm_pair(a, b));
    if (it == distances.end())
        throw ValidationError(std::string("distance not computed for pair ") +
                              object_class_symbol(a) + "," + object_class_symbol(b));
    return it->second;
}

double FeatureVector::intersection(ObjectClass a, ObjectClass b) const {
    auto it = intersections.find(norm_pair(a, b));
    if (it == intersections.end())
        throw ValidationError(std::string("intersection not computed for pair ") +
                              object_class_symbol(a) + "," + object_class_symbol(b));
    return it->second;
}

std::optional<Point> FeatureVector::midpoint(ObjectClass c) const {
    auto it = midpoints.find(c);
    if (it == midpoints.end()) return std::nullopt;
    return it->second;
}

bool grasper_open(const Point& a, const Point& b, double jaw_open_px) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy) >= jaw_open_px;
}

FeatureVector compute_features(const ShapeMap& shapes, const Requirements& req,
                               bool alpha_left, bool alpha_right) {
    FeatureVector fv;
    fv.alpha_left = alpha_left;
    fv.alpha_right = alpha_right;
    for (const ClassPair& pr : req.distances)
        fv.distances[pr] = geom::object_distance(shape_of(shapes, pr.first), shape_of(shapes, pr.second));
    for (const ClassPair& pr : req.intersections)
        fv.intersections[pr] = geom::intersection_area(shape_of(shapes, pr.first), shape_of(shapes, pr.second));
    for (const ObjectClass c : req.midpoints) {
        const geom::ObjectShape& s = shape_of(shapes, c);
        if (!s.empty()) fv.midpoints[c] = s.midpoint();
    }
    return fv;
}

} // namespace ctxg::context
