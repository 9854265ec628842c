#include "orderk/point_set.hpp"

#include <algorithm>
#include <cmath>

#include "orderk/rng.hpp"

namespace orderk {

PointSet::PointSet(int dimension, std::vector<Vec2> points, std::vector<std::string> names)
    : dim(dimension), pts(std::move(points)), labels(std::move(names)) {
    if (dim != 1 && dim != 2) throw DegenerateInput("PointSet: dim must be 1 or 2");
    for (const Vec2& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DegenerateInput("PointSet: non-finite coordinate");
        if (dim == 1 && p.y != 0.0) throw DegenerateInput("PointSet: dim=1 points must have y == 0");
    }
    if (!labels.empty() && labels.size() != pts.size())
        throw DegenerateInput("PointSet: label count does not match point count");
}

PointSet PointSet::from_1d(std::vector<double> xs, std::vector<std::string> names) {
    std::vector<Vec2> pts;
    pts.reserve(xs.size());
    for (double x : xs) pts.push_back({x, 0.0});
    return PointSet(1, std::move(pts), std::move(names));
}

double PointSet::diameter() const {
    double d2 = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d2 = std::max(d2, (pts[i] - pts[j]).norm2());
    return std::sqrt(d2);
}

Vec2 PointSet::centroid_point() const {
    Vec2 c{0, 0};
    for (const Vec2& p : pts) c = c + p;
    return pts.empty() ? c : c / static_cast<double>(pts.size());
}

std::vector<double> PointSet::xs() const {
    std::vector<double> out;
    out.reserve(pts.size());
    for (const Vec2& p : pts) out.push_back(p.x);
    return out;
}

std::string Violation::describe() const {
    std::string k = kind == Kind::Coincident ? "coincident" : kind == Kind::Collinear ? "collinear" : "cocircular";
    std::string s = k + " sites";
    for (int i : indices) s += " " + std::to_string(i);
    return s;
}

std::vector<Violation> validate_general_position(const PointSet& s, Mode mode) {
    std::vector<Violation> out;
    const int n = s.size();
    const auto& p = s.pts;
    double diam = s.diameter();
    double tol_len = (mode == Mode::Float) ? kEpsRel * diam : 0.0;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (dist(p[i], p[j]) <= tol_len) out.push_back({Violation::Kind::Coincident, {i, j}});
        }
    }
    if (s.dim == 1) return out;

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                double a[2] = {p[i].x, p[i].y}, b[2] = {p[j].x, p[j].y}, c[2] = {p[k].x, p[k].y};
                double det = orient2d(a, b, c, mode);
                bool bad;
                if (mode == Mode::Robust) {
                    bad = det == 0.0;
                } else {
                    // |det| = 2*area; compare against eps * |ij| * |ik|
                    bad = std::fabs(det) <= kEpsRel * dist(p[i], p[j]) * dist(p[i], p[k]);
                }
                if (bad) out.push_back({Violation::Kind::Collinear, {i, j, k}});
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                double a[2] = {p[i].x, p[i].y}, b[2] = {p[j].x, p[j].y}, c[2] = {p[k].x, p[k].y};
                // skip collinear triples; they cannot define a circle
                if (orient2d(a, b, c, Mode::Robust) == 0.0) continue;
                for (int l = k + 1; l < n; ++l) {
                    double d[2] = {p[l].x, p[l].y};
                    double inc = incircle(a, b, c, d, mode);
                    bool bad;
                    if (mode == Mode::Robust) {
                        bad = inc == 0.0;
                    } else {
                        double L = std::max({dist(p[i], p[j]), dist(p[i], p[k]), dist(p[i], p[l]), dist(p[j], p[k]),
                                             dist(p[j], p[l]), dist(p[k], p[l])});
                        bad = std::fabs(inc) <= kEpsRel * L * L * L * L;
                    }
                    if (bad) out.push_back({Violation::Kind::Cocircular, {i, j, k, l}});
                }
            }
        }
    }
    return out;
}

BBox make_bbox(const PointSet& s, double scale) {
    Vec2 c = s.centroid_point();
    double half = 0.5 * scale * s.diameter();
    if (half <= 0.0) half = 0.5 * scale;  // single point: arbitrary unit carrier
    return {c.x - half, c.y - half, c.x + half, c.y + half};
}

PointSet random_sites(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vec2> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) pts.push_back({rng.next_double(), rng.next_double()});
        PointSet s(2, std::move(pts));
        if (validate_general_position(s, Mode::Robust).empty()) return s;
    }
    throw DegenerateInput("random_sites: could not reach general position");
}

PointSet random_sites_1d(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> xs;
        xs.reserve(n);
        for (int i = 0; i < n; ++i) xs.push_back(rng.next_double());
        std::sort(xs.begin(), xs.end());
        bool distinct = true;
        for (int i = 0; i + 1 < n; ++i) {
            if (xs[i] == xs[i + 1]) distinct = false;
        }
        if (distinct) return PointSet::from_1d(std::move(xs));
    }
    throw DegenerateInput("random_sites_1d: could not draw distinct values");
}

}  // namespace orderk
