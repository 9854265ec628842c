#include "orderk/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace orderk {

HalfPlane HalfPlane::normalized() const {
    double n = normal.norm();
    return {normal / n, offset / n};
}

ConvexPolygon ConvexPolygon::rectangle(double xmin, double ymin, double xmax, double ymax) {
    ConvexPolygon p;
    p.v = {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
    p.tags = {{-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}};
    p.clipped = true;
    return p;
}

ConvexPolygon ConvexPolygon::from_points(std::vector<Vec2> pts) {
    ConvexPolygon p;
    p.v = std::move(pts);
    p.tags.assign(p.v.size(), kUntaggedEdge);
    return p;
}

double area(const ConvexPolygon& p) {
    const auto& v = p.v;
    if (v.size() < 3) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        s += a.cross(b);
    }
    return 0.5 * s;
}

double area_exact(const ConvexPolygon& p) {
    using namespace expansion;
    const auto& v = p.v;
    if (v.size() < 3) return 0.0;
    Exp acc{0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        acc = sum(acc, from_product(a.x, b.y));
        acc = sum(acc, negate(from_product(a.y, b.x)));
    }
    return 0.5 * estimate(acc);
}

Vec2 centroid(const ConvexPolygon& p) {
    const auto& v = p.v;
    if (v.empty()) return {0, 0};
    if (v.size() == 1) return v[0];
    if (v.size() == 2) return (v[0] + v[1]) / 2.0;
    double a6 = 0.0;
    Vec2 c{0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& p0 = v[i];
        const Vec2& p1 = v[(i + 1) % v.size()];
        double w = p0.cross(p1);
        a6 += w;
        c = c + (p0 + p1) * w;
    }
    if (a6 == 0.0) return v[0];
    return c / (3.0 * a6);
}

bool contains_point(const ConvexPolygon& poly, Vec2 p, double tol) {
    const auto& v = poly.v;
    if (v.size() < 3) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        Vec2 e = b - a;
        double len = e.norm();
        if (len == 0.0) continue;
        // signed distance of p to the directed edge; negative = outside
        double d = e.cross(p - a) / len;
        if (d < -tol) return false;
    }
    return true;
}

HalfPlane bisector(Vec2 p, Vec2 q) {
    if (p.x == q.x && p.y == q.y) throw IdenticalPoints("bisector: identical points");
    // |x-p|^2 <= |x-q|^2  <=>  (q-p).x <= (|q|^2 - |p|^2)/2
    return {q - p, 0.5 * (q.norm2() - p.norm2())};
}

ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& h, EdgeTag tag, double min_area) {
    if (poly.empty()) return poly;
    HalfPlane n = h.normalized();

    const std::size_t m = poly.v.size();
    std::vector<double> d(m);
    for (std::size_t i = 0; i < m; ++i) d[i] = n.signed_excess(poly.v[i]);

    ConvexPolygon out;
    out.v.reserve(m + 2);
    out.tags.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m;
        bool in_i = d[i] <= 0.0;
        bool in_j = d[j] <= 0.0;
        if (in_i) {
            out.v.push_back(poly.v[i]);
            out.tags.push_back(poly.tags[i]);
            if (!in_j) {
                double t = d[i] / (d[i] - d[j]);
                out.v.push_back(poly.v[i] + (poly.v[j] - poly.v[i]) * t);
                out.tags.push_back(tag);  // edge leaving here runs along the clip line
            }
        } else if (in_j) {
            double t = d[i] / (d[i] - d[j]);
            out.v.push_back(poly.v[i] + (poly.v[j] - poly.v[i]) * t);
            out.tags.push_back(poly.tags[i]);
        }
    }

    // Merge vertices that collapsed onto each other during clipping.
    if (!out.v.empty()) {
        double scale = 0.0;
        for (const Vec2& p : out.v) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
        double merge_tol = 1e-14 * std::max(scale, 1.0);
        ConvexPolygon dedup;
        for (std::size_t i = 0; i < out.v.size(); ++i) {
            if (!dedup.v.empty() && dist(dedup.v.back(), out.v[i]) <= merge_tol) {
                // keep the later tag: the surviving edge starts at the merged vertex
                dedup.tags.back() = out.tags[i];
                continue;
            }
            dedup.v.push_back(out.v[i]);
            dedup.tags.push_back(out.tags[i]);
        }
        while (dedup.v.size() > 1 && dist(dedup.v.front(), dedup.v.back()) <= merge_tol) {
            dedup.v.pop_back();
            dedup.tags.pop_back();
        }
        out = std::move(dedup);
    }

    if (out.v.size() < 3 || area(out) < min_area) return ConvexPolygon::empty_polygon();
    out.clipped = false;
    for (const EdgeTag& t : out.tags) {
        if (t.is_bbox()) out.clipped = true;
    }
    return out;
}

ConvexPolygon halfplane_intersection(const std::vector<HalfPlane>& hs, const ConvexPolygon& bbox) {
    double min_area = 1e-12 * area(bbox);
    ConvexPolygon p = bbox;
    for (const HalfPlane& h : hs) {
        p = clip(p, h, kUntaggedEdge, min_area);
        if (p.empty()) return p;
    }
    return p;
}

ConvexPolygon polygon_intersection(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.empty() || b.empty()) return ConvexPolygon::empty_polygon();
    // noise threshold scales with the smaller operand: the intersection can
    // never exceed it, and a huge clipped cell must not swallow real
    // slivers of a tiny one
    double min_area = 1e-12 * std::min(area(a), area(b));
    ConvexPolygon p = a;
    for (std::size_t i = 0; i < b.v.size(); ++i) {
        Vec2 p0 = b.v[i], p1 = b.v[(i + 1) % b.v.size()];
        Vec2 e = p1 - p0;
        // inward normal for CCW order is (-e.y, e.x); points satisfy
        // outward_normal . x <= outward_normal . p0
        Vec2 n{e.y, -e.x};
        p = clip(p, {n, n.dot(p0)}, b.tags[i], min_area);
        if (p.empty()) return p;
    }
    return p;
}

Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    Vec2 ab = b - a, ac = c - a;
    double d = 2.0 * ab.cross(ac);
    if (d == 0.0) throw Collinear("circumcenter: collinear points");
    double ab2 = ab.norm2(), ac2 = ac.norm2();
    double ux = (ac.y * ab2 - ab.y * ac2) / d;
    double uy = (ab.x * ac2 - ac.x * ab2) / d;
    return {a.x + ux, a.y + uy};
}

std::optional<Vec2> segment_intersection(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2) {
    Vec2 r = a2 - a1, s = b2 - b1;
    double denom = r.cross(s);
    double qp_r = (b1 - a1).cross(r);
    double scale = std::max({r.norm(), s.norm(), dist(a1, b1)});
    double tol = 1e-14 * scale * scale;
    if (std::fabs(denom) <= tol) {
        if (std::fabs(qp_r) > tol) return std::nullopt;  // parallel, distinct carriers
        // collinear: overlap of positive length is an error, point contact is fine
        double rr = r.dot(r);
        if (rr == 0.0) return std::nullopt;
        double t0 = (b1 - a1).dot(r) / rr;
        double t1 = (b2 - a1).dot(r) / rr;
        if (t0 > t1) std::swap(t0, t1);
        double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
        if (hi - lo > 1e-12) throw OverlappingSegments("segment_intersection: collinear overlap");
        if (hi < lo) return std::nullopt;
        return a1 + r * (0.5 * (lo + hi));
    }
    double t = (b1 - a1).cross(s) / denom;
    double u = qp_r / denom;
    double eps = 1e-12;
    if (t < -eps || t > 1.0 + eps || u < -eps || u > 1.0 + eps) return std::nullopt;
    return a1 + r * t;
}

}  // namespace orderk
