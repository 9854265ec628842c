#pragma once

#include <map>
#include <vector>

#include "orderk/point_set.hpp"

namespace orderk {

// Cell f(P_k): the locus of points whose k nearest sites are exactly
// `owners`. The polygon may be clipped at the construction bounding box;
// bounded == !polygon.clipped.
struct OrderKCell {
    std::vector<int> owners;  // sorted, |owners| == k
    ConvexPolygon poly;
    int k = 0;
    bool bounded = false;
};

enum class EnumerationStrategy { Auto, Exhaustive, FloodFill };

struct OrderKDiagram {
    int k = 0;
    int n = 0;  // number of source sites
    std::vector<OrderKCell> cells;  // sorted by owner set
    BBox bbox;

    const OrderKCell* find(const std::vector<int>& owners) const;
    double total_area() const;

private:
    friend OrderKDiagram build_diagram(const PointSet&, int, const BBox&, EnumerationStrategy, bool);
    std::map<std::vector<int>, int> index_;
};

// Union of the order-k cells owning site `site`.
struct Region {
    int site = -1;
    int k = 0;
    std::vector<OrderKCell> cells;
    double total_area = 0.0;
    bool bounded = false;  // all member cells bounded
};

// Indices of the k sites nearest to q, sorted by index. Brute force; also
// serves as the seed primitive of the flood-fill enumeration.
std::vector<int> k_nearest_sites(const PointSet& s, Vec2 q, int k);

// The cell of the owner subset, or Empty when the subset defines no cell.
OrderKCell cell(const PointSet& s, const std::vector<int>& owners, const BBox& bbox);

// All nonempty order-k cells. Enumerates every C(n,k) subset at desk scale
// and flood-fills across cell edges otherwise (the two agree where both
// run). Throws DegenerateInput when robust validation fails, BBoxTooSmall
// when an unclipped cell approaches the carrier boundary.
OrderKDiagram build_diagram(const PointSet& s, int k, const BBox& bbox,
                            EnumerationStrategy strategy = EnumerationStrategy::Auto, bool validate = true);

Region region(const PointSet& s, int k, int site, const BBox& bbox);
Region region_from(const OrderKDiagram& d, int site);

// True iff R_{k-1}(site) is contained in R_k(site) for every 2 <= k <= kmax,
// tested by area-exhaustion of each member cell against the next region.
bool region_nesting_check(const PointSet& s, int site, int kmax, const BBox& bbox);

// Vertices of the 1-D order-k diagram: (x_i + x_{i+k})/2, ascending.
std::vector<double> vertices_1d(const PointSet& s, int k);

// Point strictly inside a nonempty cell polygon: the centroid, or the
// centroid of the largest inscribed vertex triangle when the centroid sits
// within eps of an edge.
Vec2 interior_witness(const ConvexPolygon& poly, double eps);

}  // namespace orderk
