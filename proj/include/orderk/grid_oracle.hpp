#pragma once

#include "orderk/coordinates.hpp"
#include "orderk/voronoi.hpp"

namespace orderk {

// Brute-force references computed from distance sorting alone; they never
// touch the polygon construction, so they cross-check it independently.

// Padded axis-aligned window covering every member cell of the region.
BBox region_window(const Region& r, double pad_frac = 0.02);

// Measure of {x in window : site is among the k nearest} counted on a
// resolution x resolution grid of cell centers.
double oracle_region_area(const PointSet& s, int k, int site, const BBox& window, int resolution);

// Fraction of grid points over the diagram's bbox whose brute-force
// k-nearest set disagrees with the constructed cell containing them.
double oracle_ownership_disagreement(const PointSet& s, const OrderKDiagram& d, int resolution);

// Region-based coordinates measured directly: weight of j is the measure of
// the part of R_k(site) whose (k+1)-th nearest site is j.
WeightVector oracle_generalized_weights(const PointSet& s, int k, int site, const BBox& window, int resolution);

}  // namespace orderk
