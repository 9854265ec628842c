#include "orderk/interp2d.hpp"

namespace orderk {

ScatterData::ScatterData(PointSet s, std::vector<double> v) : sites(std::move(s)), values(std::move(v)) {
    if (sites.size() != static_cast<int>(values.size()))
        throw DegenerateInput("ScatterData: site and value counts differ");
    if (sites.dim != 2) throw DegenerateInput("ScatterData: dim must be 2");
}

InterpolationResult interpolate(const ScatterData& data, Vec2 q, int k, double bbox_scale) {
    const int n = data.sites.size();
    if (n < 3) throw DegenerateInput("interpolate: need at least 3 sites");
    // After insertion the augmented set has n+1 sites; the region identity
    // needs 1 <= k <= (n+1)-2.
    if (k < 1 || k > n - 1) throw OrderOutOfRange("interpolate: need 1 <= k <= n-1");

    std::vector<Vec2> pts = data.sites.pts;
    pts.push_back(q);
    PointSet augmented(2, std::move(pts));
    auto violations = validate_general_position(augmented, Mode::Robust);
    if (!violations.empty())
        throw DegenerateInsertion("interpolate: query breaks general position (" + violations.front().describe() +
                                  ")");

    BBox bbox = make_bbox(augmented, bbox_scale);
    WeightVector w;
    try {
        w = generalized_weights(augmented, k, n, bbox);
    } catch (const UnboundedRegion&) {
        throw UnboundedRegion("interpolate: R_k(q) is unbounded; query too close to or outside the hull");
    }

    InterpolationResult r;
    r.k = k;
    r.weights = w;
    r.query = q;
    for (const auto& [j, wj] : w.entries) {
        r.value += wj * data.values[j];
        r.support.push_back(j);
    }
    return r;
}

double InterpolationResult::query_residual(const ScatterData& data) const {
    return dist(weights.combine(data.sites), query);
}

std::vector<MultiResult> interpolate_multi(const ScatterData& data, Vec2 q, const std::vector<int>& klist,
                                           double bbox_scale) {
    std::vector<MultiResult> out;
    out.reserve(klist.size());
    for (int k : klist) {
        MultiResult m;
        m.k = k;
        try {
            m.result = interpolate(data, q, k, bbox_scale);
        } catch (const Error& e) {
            m.error = e.what();
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace orderk
