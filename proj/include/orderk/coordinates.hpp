#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "orderk/voronoi.hpp"

namespace orderk {

// Sparse convex-combination coefficients expressing site `site` through its
// order-k neighbours. Entries exclude the reference site; they sum to 1 and
// are nonnegative (tiny clipping noise is clamped after validation).
struct WeightVector {
    std::map<int, double> entries;
    int site = -1;
    int k = 0;

    double sum() const;
    // Reconstruction Sum_j w_j Q_j.
    Vec2 combine(const PointSet& s) const;
    // |Sum_j w_j Q_j - Q_site|.
    double reconstruction_residual(const PointSet& s) const;
};

struct IdentityTerm {
    int site = -1;
    double cell_area = 0.0;  // sigma of the sub-cell intersection
};

// Per-cell report of the two convex combinations that define the point H.
struct CellIdentityReport {
    OrderKCell cell;
    std::vector<IdentityTerm> lhs_terms;  // over V_{k-1} pieces, sites in P_k \ P_{k-1}
    std::vector<IdentityTerm> rhs_terms;  // over V_{k+1} pieces, sites in P_{k+1} \ P_k
    Vec2 lhs_point, rhs_point;            // both estimates of H
    double cell_area = 0.0;               // sigma(f(P_k)) as used by the combination
    double lhs_area_sum = 0.0, rhs_area_sum = 0.0;
    double residual = 0.0;  // |lhs_point - rhs_point|
};

// The sub-cell of `cell` whose points have `dropped` as their k-th ranked
// owner: sigma of it is the f(P_{k-1}) ∩ f(P_k) term with P_k \ P_{k-1} =
// {dropped}. Computed by subdividing the cell, so the pieces share its
// boundary representation exactly.
ConvexPolygon identity_piece_below(const PointSet& s, const OrderKCell& cell, int dropped);
// The sub-cell whose points have `added` as their (k+1)-th neighbour: the
// f(P_{k+1}) ∩ f(P_k) term with P_{k+1} \ P_k = {added}.
ConvexPolygon identity_piece_above(const PointSet& s, const OrderKCell& cell, int added);

// Classical local coordinates: w_j = sigma(f({l,j}) ∩ f({l})) / sigma(f({l})).
// Throws UnboundedCell when the order-1 cell is clipped.
WeightVector sibson_weights(const PointSet& s, int site, const BBox& bbox);

// The order-k identity for one bounded cell, 2 <= k <= n-2.
CellIdentityReport aurenhammer_identity(const PointSet& s, int k, const OrderKCell& cell);

Vec2 h_point(const CellIdentityReport& report);

// Region-based coordinates over R_k(site), 1 <= k <= n-2; for k = 1 they are
// the classical weights. Throws UnboundedRegion when the region is clipped.
WeightVector generalized_weights(const PointSet& s, int k, int site, const BBox& bbox);
WeightVector generalized_weights_from(const PointSet& s, const Region& reg);

// Barycentric area ratios of p inside triangle (a, b, c).
std::array<double, 3> barycentric_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c);

// The two convex combinations of the quadrilateral identity; both equal the
// intersection of the diagonals.
std::pair<Vec2, Vec2> quad_identity(Vec2 q1, Vec2 q2, Vec2 q3, Vec2 q4);

// Exact check of  Q1 s(234) + Q3 s(124) == Q2 s(134) + Q4 s(123)  in
// expansion arithmetic: no rounding anywhere, true equality or not.
bool quad_identity_exact(Vec2 q1, Vec2 q2, Vec2 q3, Vec2 q4);

// The quadrilateral of the four circumcenters C_123, C_124, C_134, C_234
// (counter-clockwise), i.e. the perpendicular-bisector cell of the quad.
ConvexPolygon bisector_cell_of_quad(const std::array<Vec2, 4>& q);

struct QuadAreaRatio {
    double measured = 0.0;  // sigma(cell) / sigma(quad)
    double formula = 0.0;   // |1/4 (cot a + cot g)(cot b + cot d)|
};

// Area ratio of the bisector-construction cell against the cotangent
// formula. Throws NonConvexQuad / DegenerateAngles (the cocircular case
// collapses the construction and is reported as degenerate).
QuadAreaRatio quad_area_ratio(const std::array<Vec2, 4>& q, const ConvexPolygon& cell);

// Distinct sites participating in the cell's bisector edges, in convex
// cyclic order; a cell qualifies for the diagonal test when it has exactly
// 4 vertices and 4 generating sites.
std::vector<int> cell_generating_sites(const OrderKCell& cell, const PointSet& s);

// Max per-site mismatch (relative to sigma(R_{k-1})) between the summed
// order-k identities over R_k(site) with the site's own terms removed and
// the order-(k-1) sum; the inductive step of the region identity.
double induction_consistency_residual(const PointSet& s, int k, int site, const BBox& bbox);

}  // namespace orderk
