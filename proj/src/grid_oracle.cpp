#include "orderk/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orderk {

BBox region_window(const Region& r, double pad_frac) {
    BBox w{1e300, 1e300, -1e300, -1e300};
    for (const OrderKCell& c : r.cells) {
        for (const Vec2& v : c.poly.v) {
            w.xmin = std::min(w.xmin, v.x);
            w.ymin = std::min(w.ymin, v.y);
            w.xmax = std::max(w.xmax, v.x);
            w.ymax = std::max(w.ymax, v.y);
        }
    }
    double pad = pad_frac * std::max(w.xmax - w.xmin, w.ymax - w.ymin);
    w.xmin -= pad;
    w.ymin -= pad;
    w.xmax += pad;
    w.ymax += pad;
    return w;
}

double oracle_region_area(const PointSet& s, int k, int site, const BBox& window, int resolution) {
    const int n = s.size();
    const double hx = (window.xmax - window.xmin) / resolution;
    const double hy = (window.ymax - window.ymin) / resolution;
    long long hits = 0;
    for (int iy = 0; iy < resolution; ++iy) {
        double y = window.ymin + (iy + 0.5) * hy;
        for (int ix = 0; ix < resolution; ++ix) {
            double x = window.xmin + (ix + 0.5) * hx;
            double dx = s.pts[site].x - x, dy = s.pts[site].y - y;
            double dsite = dx * dx + dy * dy;
            int closer = 0;
            for (int j = 0; j < n; ++j) {
                double jx = s.pts[j].x - x, jy = s.pts[j].y - y;
                if (jx * jx + jy * jy < dsite) {
                    if (++closer >= k) break;
                }
            }
            if (closer < k) ++hits;
        }
    }
    return static_cast<double>(hits) * hx * hy;
}

double oracle_ownership_disagreement(const PointSet& s, const OrderKDiagram& d, int resolution) {
    const BBox& b = d.bbox;
    const double hx = (b.xmax - b.xmin) / resolution;
    const double hy = (b.ymax - b.ymin) / resolution;
    const double tol = 1e-9 * b.side();
    long long disagree = 0;
    for (int iy = 0; iy < resolution; ++iy) {
        double y = b.ymin + (iy + 0.5) * hy;
        for (int ix = 0; ix < resolution; ++ix) {
            Vec2 p{b.xmin + (ix + 0.5) * hx, y};
            std::vector<int> owners = k_nearest_sites(s, p, d.k);
            const OrderKCell* c = d.find(owners);
            if (c == nullptr || !contains_point(c->poly, p, tol)) ++disagree;
        }
    }
    return static_cast<double>(disagree) / (static_cast<double>(resolution) * resolution);
}

WeightVector oracle_generalized_weights(const PointSet& s, int k, int site, const BBox& window, int resolution) {
    const int n = s.size();
    const double hx = (window.xmax - window.xmin) / resolution;
    const double hy = (window.ymax - window.ymin) / resolution;
    std::vector<double> measure(n, 0.0);
    double total = 0.0;
    std::vector<int> idx(n);
    std::vector<double> d2(n);
    for (int iy = 0; iy < resolution; ++iy) {
        double y = window.ymin + (iy + 0.5) * hy;
        for (int ix = 0; ix < resolution; ++ix) {
            double x = window.xmin + (ix + 0.5) * hx;
            for (int j = 0; j < n; ++j) {
                double jx = s.pts[j].x - x, jy = s.pts[j].y - y;
                d2[j] = jx * jx + jy * jy;
            }
            std::iota(idx.begin(), idx.end(), 0);
            std::partial_sort(idx.begin(), idx.begin() + std::min(k + 1, n), idx.end(),
                              [&](int a, int b) { return d2[a] < d2[b]; });
            bool in_region = false;
            for (int r = 0; r < k; ++r) {
                if (idx[r] == site) in_region = true;
            }
            if (!in_region) continue;
            total += 1.0;
            measure[idx[k]] += 1.0;  // the (k+1)-th nearest site
        }
    }
    WeightVector w;
    w.site = site;
    w.k = k;
    if (total > 0.0) {
        for (int j = 0; j < n; ++j) {
            if (measure[j] > 0.0) w.entries[j] = measure[j] / total;
        }
    }
    return w;
}

}  // namespace orderk
