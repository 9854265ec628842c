#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orderk/geometry.hpp"
#include "orderk/predicates.hpp"

namespace orderk {

// Labelled point set in R^1 or R^2. One-dimensional sets store y == 0.
// Construction checks finiteness and dimension only; general position is
// reported (not enforced) by validate_general_position, so degenerate inputs
// can be loaded and diagnosed.
struct PointSet {
    int dim = 2;
    std::vector<Vec2> pts;
    std::vector<std::string> labels;  // optional; empty or one per point

    PointSet() = default;
    PointSet(int dimension, std::vector<Vec2> points, std::vector<std::string> names = {});
    static PointSet from_1d(std::vector<double> xs, std::vector<std::string> names = {});

    int size() const { return static_cast<int>(pts.size()); }
    double diameter() const;
    Vec2 centroid_point() const;
    std::vector<double> xs() const;  // dim=1 values
};

struct Violation {
    enum class Kind { Coincident, Collinear, Cocircular };
    Kind kind;
    std::vector<int> indices;
    std::string describe() const;
};

// Empty result iff the set is in general position within the active mode.
// Robust mode detects exact degeneracies; float mode additionally flags
// near-degeneracies at relative tolerance kEpsRel.
std::vector<Violation> validate_general_position(const PointSet& s, Mode mode = Mode::Robust);

// Axis-aligned square centered at the centroid with side scale * diameter.
struct BBox {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
    double side() const { return xmax - xmin; }
    double area() const { return (xmax - xmin) * (ymax - ymin); }
    ConvexPolygon polygon() const { return ConvexPolygon::rectangle(xmin, ymin, xmax, ymax); }
};

BBox make_bbox(const PointSet& s, double scale = 20.0);

// n uniform sites in the unit square, rejection-resampled until the set
// passes robust general-position validation. Deterministic in the seed.
PointSet random_sites(int n, std::uint64_t seed);
// n distinct reals in (0, 1), sorted ascending.
PointSet random_sites_1d(int n, std::uint64_t seed);

}  // namespace orderk
