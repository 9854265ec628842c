#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "orderk/errors.hpp"
#include "orderk/predicates.hpp"

namespace orderk {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Closed half-plane { p : normal . p <= offset }.
struct HalfPlane {
    Vec2 normal;
    double offset = 0.0;

    double signed_excess(Vec2 p) const { return normal.dot(p) - offset; }
    bool contains(Vec2 p) const { return signed_excess(p) <= 0.0; }
    // Scaled so that |normal| = 1; signed_excess then measures distance.
    HalfPlane normalized() const;
};

// Tag describing where a polygon edge came from. Voronoi construction labels
// each edge with the site pair whose bisector carries it; edges inherited
// from the clipping box keep the box side so the `clipped` flag stays exact.
struct EdgeTag {
    int a = -1;  // site index, -1 for a bounding-box edge, -2 for untagged
    int b = -1;  // second site index, or box side 0..3 when a == -1

    bool is_bbox() const { return a == -1; }
    bool is_bisector() const { return a >= 0; }
    bool operator==(const EdgeTag&) const = default;
};

inline constexpr EdgeTag kUntaggedEdge{-2, -2};

// Convex polygon, counter-clockwise vertex order. `tags[i]` belongs to the
// edge from v[i] to v[(i+1) % n]. An empty vertex list is the designated
// Empty value (zero area).
struct ConvexPolygon {
    std::vector<Vec2> v;
    std::vector<EdgeTag> tags;
    bool clipped = false;

    bool empty() const { return v.empty(); }
    std::size_t size() const { return v.size(); }

    static ConvexPolygon empty_polygon() { return {}; }
    // Axis-aligned rectangle, edges tagged as bbox sides 0..3.
    static ConvexPolygon rectangle(double xmin, double ymin, double xmax, double ymax);
    static ConvexPolygon from_points(std::vector<Vec2> pts);
};

// Shoelace area (>= 0 for CCW polygons; Empty -> 0).
double area(const ConvexPolygon& p);
// Shoelace accumulated in exact expansion arithmetic and rounded once;
// immune to the cancellation that dominates plain summation on slivers.
double area_exact(const ConvexPolygon& p);
Vec2 centroid(const ConvexPolygon& p);

// True when p is inside or within `tol` of the boundary.
bool contains_point(const ConvexPolygon& poly, Vec2 p, double tol = 0.0);

// Half-plane of points at distance to p <= distance to q.
HalfPlane bisector(Vec2 p, Vec2 q);

// Clip `poly` by one half-plane. Surviving edges keep their tags, the new
// edge along the clip line receives `tag`. min_area: results below it are
// collapsed to Empty.
ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h, EdgeTag tag, double min_area);

// bbox clipped successively by every half-plane. `clipped` is set iff some
// surviving edge lies on the bbox boundary.
ConvexPolygon halfplane_intersection(const std::vector<HalfPlane>& hs, const ConvexPolygon& bbox);

// Convex intersection, implemented by clipping a with b's edge half-planes.
ConvexPolygon polygon_intersection(const ConvexPolygon& a, const ConvexPolygon& b);

// Center of the circle through a, b, c. Throws Collinear.
Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c);

// Proper intersection point of segments [a1,a2] and [b1,b2], including
// endpoint contact; std::nullopt when they do not meet. Throws
// OverlappingSegments on collinear overlap of positive length.
std::optional<Vec2> segment_intersection(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2);

}  // namespace orderk
