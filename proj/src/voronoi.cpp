#include "orderk/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace orderk {

namespace {

double binomial_capped(int n, int k, double cap) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) {
        c *= static_cast<double>(n - i) / static_cast<double>(i + 1);
        if (c > cap) return cap + 1.0;
    }
    return c;
}

void check_subset(const PointSet& s, const std::vector<int>& owners, int k) {
    if (static_cast<int>(owners.size()) != k) throw InvalidSubset("cell: |owners| != k");
    std::set<int> seen;
    for (int i : owners) {
        if (i < 0 || i >= s.size()) throw InvalidSubset("cell: site index out of range");
        if (!seen.insert(i).second) throw InvalidSubset("cell: repeated site index");
    }
}

OrderKCell make_cell_unchecked(const PointSet& s, std::vector<int> owners, const BBox& bbox) {
    const int n = s.size();
    std::vector<char> inside(n, 0);
    for (int i : owners) inside[i] = 1;

    ConvexPolygon poly = bbox.polygon();
    for (int t : owners) {
        for (int u = 0; u < n && !poly.empty(); ++u) {
            if (inside[u]) continue;
            poly = clip(poly, bisector(s.pts[t], s.pts[u]), EdgeTag{t, u}, 0.0);
        }
    }

    OrderKCell c;
    c.owners = std::move(owners);
    std::sort(c.owners.begin(), c.owners.end());
    c.k = static_cast<int>(c.owners.size());

    // Phantom suppression is structural, not area-based: a clipping
    // artefact has no interior point whose k nearest sites are the owners,
    // while a genuine cell, however small, contains its witness.
    if (!poly.empty() && area(poly) > 0.0) {
        Vec2 w = interior_witness(poly, 1e-9 * bbox.side());
        if (k_nearest_sites(s, w, c.k) == c.owners) c.poly = std::move(poly);
    }
    c.bounded = !c.poly.empty() && !c.poly.clipped;
    return c;
}

// Bounded cells must keep clear of the carrier boundary; a vertex close to
// it means the 20x bbox is too small for this configuration.
void check_margin(const OrderKCell& c, const BBox& bbox) {
    if (!c.bounded) return;
    double margin = 0.01 * bbox.side();
    for (const Vec2& v : c.poly.v) {
        if (v.x < bbox.xmin + margin || v.x > bbox.xmax - margin || v.y < bbox.ymin + margin ||
            v.y > bbox.ymax - margin)
            throw BBoxTooSmall("build_diagram: bounded cell near bbox boundary; increase --bbox-scale");
    }
}

}  // namespace

const OrderKCell* OrderKDiagram::find(const std::vector<int>& owners) const {
    auto it = index_.find(owners);
    return it == index_.end() ? nullptr : &cells[it->second];
}

double OrderKDiagram::total_area() const {
    double s = 0.0;
    for (const OrderKCell& c : cells) s += area(c.poly);
    return s;
}

std::vector<int> k_nearest_sites(const PointSet& s, Vec2 q, int k) {
    std::vector<int> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::partial_sort(idx.begin(), idx.begin() + k, idx.end(),
                      [&](int a, int b) { return (s.pts[a] - q).norm2() < (s.pts[b] - q).norm2(); });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

OrderKCell cell(const PointSet& s, const std::vector<int>& owners, const BBox& bbox) {
    if (s.dim != 2) throw DegenerateInput("cell: dim must be 2");
    int k = static_cast<int>(owners.size());
    if (k < 1 || k > s.size() - 1) throw InvalidSubset("cell: k out of range");
    check_subset(s, owners, k);
    return make_cell_unchecked(s, owners, bbox);
}

OrderKDiagram build_diagram(const PointSet& s, int k, const BBox& bbox, EnumerationStrategy strategy, bool validate) {
    if (s.dim != 2) throw DegenerateInput("build_diagram: dim must be 2");
    const int n = s.size();
    if (k < 1 || k > n - 1) throw OrderOutOfRange("build_diagram: need 1 <= k <= n-1");
    if (validate) {
        auto violations = validate_general_position(s, Mode::Robust);
        if (!violations.empty())
            throw DegenerateInput("build_diagram: degenerate input (" + violations.front().describe() + ")");
    }

    if (strategy == EnumerationStrategy::Auto) {
        strategy = binomial_capped(n, k, 2e5) <= 2e5 ? EnumerationStrategy::Exhaustive : EnumerationStrategy::FloodFill;
    }

    OrderKDiagram d;
    d.k = k;
    d.n = n;
    d.bbox = bbox;

    if (strategy == EnumerationStrategy::Exhaustive) {
        std::vector<int> owners(k);
        std::iota(owners.begin(), owners.end(), 0);
        while (true) {
            OrderKCell c = make_cell_unchecked(s, owners, bbox);
            if (!c.poly.empty()) d.cells.push_back(std::move(c));
            // next combination
            int i = k - 1;
            while (i >= 0 && owners[i] == n - k + i) --i;
            if (i < 0) break;
            ++owners[i];
            for (int j = i + 1; j < k; ++j) owners[j] = owners[j - 1] + 1;
        }
    } else {
        std::set<std::vector<int>> visited;
        std::deque<std::vector<int>> queue;
        auto push = [&](std::vector<int> owners) {
            std::sort(owners.begin(), owners.end());
            if (visited.insert(owners).second) queue.push_back(std::move(owners));
        };
        // seeds: k-nearest sets at the bbox corners and at every vertex of
        // the order-1 diagram; single-owner swaps across edges reach the rest
        push(k_nearest_sites(s, {bbox.xmin, bbox.ymin}, k));
        push(k_nearest_sites(s, {bbox.xmax, bbox.ymin}, k));
        push(k_nearest_sites(s, {bbox.xmax, bbox.ymax}, k));
        push(k_nearest_sites(s, {bbox.xmin, bbox.ymax}, k));
        push(k_nearest_sites(s, s.centroid_point(), k));
        for (const Vec2& p : s.pts) push(k_nearest_sites(s, p, k));
        if (k > 1) {
            for (int site = 0; site < n; ++site) {
                OrderKCell c1 = make_cell_unchecked(s, {site}, bbox);
                for (const Vec2& v : c1.poly.v) push(k_nearest_sites(s, v, k));
            }
        }

        while (!queue.empty()) {
            std::vector<int> owners = std::move(queue.front());
            queue.pop_front();
            OrderKCell c = make_cell_unchecked(s, owners, bbox);
            if (c.poly.empty()) continue;
            for (const EdgeTag& t : c.poly.tags) {
                if (!t.is_bisector()) continue;
                std::vector<int> nb = c.owners;
                std::replace(nb.begin(), nb.end(), t.a, t.b);
                push(std::move(nb));
            }
            d.cells.push_back(std::move(c));
        }
    }

    std::sort(d.cells.begin(), d.cells.end(),
              [](const OrderKCell& a, const OrderKCell& b) { return a.owners < b.owners; });
    for (std::size_t i = 0; i < d.cells.size(); ++i) {
        check_margin(d.cells[i], bbox);
        d.index_[d.cells[i].owners] = static_cast<int>(i);
    }
    return d;
}

Region region_from(const OrderKDiagram& d, int site) {
    if (site < 0 || site >= d.n) throw InvalidSubset("region: site index out of range");
    Region r;
    r.site = site;
    r.k = d.k;
    r.bounded = true;
    for (const OrderKCell& c : d.cells) {
        if (!std::binary_search(c.owners.begin(), c.owners.end(), site)) continue;
        r.cells.push_back(c);
        r.total_area += area(c.poly);
        r.bounded = r.bounded && c.bounded;
    }
    return r;
}

Region region(const PointSet& s, int k, int site, const BBox& bbox) {
    return region_from(build_diagram(s, k, bbox), site);
}

bool region_nesting_check(const PointSet& s, int site, int kmax, const BBox& bbox) {
    Region prev = region(s, 1, site, bbox);
    for (int k = 2; k <= kmax; ++k) {
        Region cur = region(s, k, site, bbox);
        for (const OrderKCell& c : prev.cells) {
            double covered = 0.0;
            for (const OrderKCell& big : cur.cells) covered += area(polygon_intersection(c.poly, big.poly));
            if (std::fabs(covered - area(c.poly)) > 1e-9 * std::max(area(c.poly), 1e-300)) return false;
        }
        prev = std::move(cur);
    }
    return true;
}

std::vector<double> vertices_1d(const PointSet& s, int k) {
    if (s.dim != 1) throw DegenerateInput("vertices_1d: dim must be 1");
    std::vector<double> xs = s.xs();
    std::sort(xs.begin(), xs.end());
    const int n = static_cast<int>(xs.size());
    if (k < 1 || k > n - 1) throw OrderOutOfRange("vertices_1d: need 1 <= k <= n-1");
    std::vector<double> out;
    out.reserve(n - k);
    for (int i = 0; i + k < n; ++i) out.push_back(0.5 * (xs[i] + xs[i + k]));
    return out;
}

Vec2 interior_witness(const ConvexPolygon& poly, double eps) {
    Vec2 c = centroid(poly);
    bool clear = true;
    const auto& v = poly.v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        Vec2 e = b - a;
        double len = e.norm();
        if (len == 0.0) continue;
        if (e.cross(c - a) / len < eps) clear = false;
    }
    if (clear) return c;

    double best = -1.0;
    Vec2 best_c = c;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            for (std::size_t k = j + 1; k < v.size(); ++k) {
                double a2 = (v[j] - v[i]).cross(v[k] - v[i]);
                if (a2 > best) {
                    best = a2;
                    best_c = (v[i] + v[j] + v[k]) / 3.0;
                }
            }
    return best_c;
}

}  // namespace orderk
