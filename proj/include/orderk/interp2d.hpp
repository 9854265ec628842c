#pragma once

#include <optional>
#include <string>

#include "orderk/coordinates.hpp"

namespace orderk {

// Scattered 2-D data: sites plus one function value per site.
struct ScatterData {
    PointSet sites;
    std::vector<double> values;

    ScatterData() = default;
    ScatterData(PointSet s, std::vector<double> v);
};

struct InterpolationResult {
    double value = 0.0;
    WeightVector weights;
    int k = 0;
    std::vector<int> support;  // contributing site indices, ascending
    Vec2 query;
    // |Sum_j w_j Q_j - query|: how well the weights reproduce the query point.
    double query_residual(const ScatterData& data) const;
};

// Natural-neighbour estimate of the field at q: insert q into the site set,
// take the region-based coordinates of the inserted site at order k, and
// average the data values with them. k = 1 is classical Sibson
// interpolation. Throws DegenerateInsertion when q breaks general position,
// UnboundedRegion near/outside the hull, OrderOutOfRange for k > n-1.
InterpolationResult interpolate(const ScatterData& data, Vec2 q, int k, double bbox_scale = 20.0);

struct MultiResult {
    int k = 0;
    std::optional<InterpolationResult> result;
    std::string error;  // empty on success
};

// One interpolation per requested order; individual failures are reported
// per entry instead of aborting the batch.
std::vector<MultiResult> interpolate_multi(const ScatterData& data, Vec2 q, const std::vector<int>& klist,
                                           double bbox_scale = 20.0);

}  // namespace orderk
