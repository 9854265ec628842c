#include "orderk/coordinates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace orderk {

namespace {

using dd::DD;

struct LineDD {
    DD nx, ny, c;  // n . x = c
};

LineDD tag_line(const PointSet& s, const EdgeTag& t) {
    Vec2 p = s.pts[t.a], q = s.pts[t.b];
    DD qq = dd::add(dd::mul(DD(q.x), DD(q.x)), dd::mul(DD(q.y), DD(q.y)));
    DD pp = dd::add(dd::mul(DD(p.x), DD(p.x)), dd::mul(DD(p.y), DD(p.y)));
    return {dd::from_diff(q.x, p.x), dd::from_diff(q.y, p.y), dd::mul(dd::sub(qq, pp), DD(0.5))};
}

bool meet(const LineDD& a, const LineDD& b, DD& x, DD& y) {
    DD det = dd::sub(dd::mul(a.nx, b.ny), dd::mul(a.ny, b.nx));
    if (det.value() == 0.0) return false;
    x = dd::div(dd::sub(dd::mul(a.c, b.ny), dd::mul(b.c, a.ny)), det);
    y = dd::div(dd::sub(dd::mul(a.nx, b.c), dd::mul(b.nx, a.c)), det);
    return true;
}

// Shoelace area with every vertex re-derived in double-double precision
// from the bisector lines its adjacent edges lie on. Sliver cells whose
// area is far below the double representation granularity of their
// vertices stay well conditioned this way, and pieces that share a
// subdivision line reproduce bit-identical vertices.
double precise_area(const PointSet& s, const ConvexPolygon& poly) {
    const std::size_t n = poly.v.size();
    if (n < 3) return 0.0;
    double scale = 0.0;
    for (const Vec2& v : poly.v) scale = std::max({scale, std::fabs(v.x), std::fabs(v.y)});
    std::vector<DD> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeTag& prev = poly.tags[(i + n - 1) % n];
        const EdgeTag& cur = poly.tags[i];
        DD x(poly.v[i].x), y(poly.v[i].y);
        if (prev.is_bisector() && cur.is_bisector() && !(prev == cur)) {
            DD mx, my;
            if (meet(tag_line(s, prev), tag_line(s, cur), mx, my)) {
                // accept the refined vertex only if it confirms the double one
                if (std::fabs(mx.hi - poly.v[i].x) < 1e-6 * (scale + 1.0) &&
                    std::fabs(my.hi - poly.v[i].y) < 1e-6 * (scale + 1.0)) {
                    x = mx;
                    y = my;
                }
            }
        }
        xs[i] = x;
        ys[i] = y;
    }
    DD acc(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        acc = dd::add(acc, dd::sub(dd::mul(xs[i], ys[j]), dd::mul(ys[i], xs[j])));
    }
    return 0.5 * acc.value();
}

void validate_weights(WeightVector& w) {
    double total = w.sum();
    if (std::fabs(total - 1.0) > 1e-9) throw NumericalFailure("weights do not sum to 1 within 1e-9");
    for (auto& [j, wj] : w.entries) {
        if (wj < -1e-12) throw NumericalFailure("negative weight beyond -1e-12");
        if (wj < 0.0) wj = 0.0;  // clipping noise
    }
}

// Interior angle at vertex b of the path a-b-c, as (cos, sin) with sin > 0
// for a convex CCW corner.
std::pair<double, double> corner_cos_sin(Vec2 a, Vec2 b, Vec2 c) {
    Vec2 u = a - b, v = c - b;
    double cross = v.cross(u);  // positive for convex CCW corner
    double dot = u.dot(v);
    double scale = u.norm() * v.norm();
    return {dot / scale, cross / scale};
}

}  // namespace

double WeightVector::sum() const {
    double s = 0.0;
    for (const auto& [j, w] : entries) s += w;
    return s;
}

Vec2 WeightVector::combine(const PointSet& s) const {
    Vec2 p{0, 0};
    for (const auto& [j, w] : entries) p = p + s.pts[j] * w;
    return p;
}

double WeightVector::reconstruction_residual(const PointSet& s) const {
    if (site < 0 || site >= s.size())
        throw InvalidSubset("reconstruction_residual: reference site is not part of this set");
    return dist(combine(s), s.pts[site]);
}

ConvexPolygon identity_piece_below(const PointSet& s, const OrderKCell& cell, int dropped) {
    ConvexPolygon p = cell.poly;
    for (int u : cell.owners) {
        if (u == dropped || p.empty()) continue;
        // keep the side where u is closer, so dropped ranks last
        p = clip(p, bisector(s.pts[u], s.pts[dropped]), EdgeTag{u, dropped}, 0.0);
    }
    return p;
}

ConvexPolygon identity_piece_above(const PointSet& s, const OrderKCell& cell, int added) {
    ConvexPolygon p = cell.poly;
    for (int v = 0; v < s.size() && !p.empty(); ++v) {
        if (v == added || std::binary_search(cell.owners.begin(), cell.owners.end(), v)) continue;
        p = clip(p, bisector(s.pts[added], s.pts[v]), EdgeTag{added, v}, 0.0);
    }
    return p;
}

WeightVector sibson_weights(const PointSet& s, int site, const BBox& bbox) {
    if (site < 0 || site >= s.size()) throw InvalidSubset("sibson_weights: site index out of range");
    OrderKCell c1 = cell(s, {site}, bbox);
    if (c1.poly.empty() || !c1.bounded) throw UnboundedCell("sibson_weights: f({Q_l}) is clipped");
    double denom = precise_area(s, c1.poly);

    WeightVector w;
    w.site = site;
    w.k = 1;
    for (int j = 0; j < s.size(); ++j) {
        if (j == site) continue;
        double a = precise_area(s, identity_piece_above(s, c1, j));
        if (a > 0.0) w.entries[j] = a / denom;
    }
    validate_weights(w);
    return w;
}

CellIdentityReport aurenhammer_identity(const PointSet& s, int k, const OrderKCell& c) {
    if (k != c.k) throw OrderOutOfRange("aurenhammer_identity: k does not match the cell");
    if (k < 2 || k > s.size() - 2) throw OrderOutOfRange("aurenhammer_identity: need 2 <= k <= n-2");
    if (c.poly.empty() || !c.bounded) throw UnboundedCell("aurenhammer_identity: cell is clipped");

    CellIdentityReport rep;
    rep.cell = c;
    double cell_area = precise_area(s, c.poly);
    rep.cell_area = cell_area;

    // V_{k-1} pieces: subsets P_k minus one owner; the dropped owner is the
    // site the piece multiplies.
    for (int dropped : c.owners) {
        double a = precise_area(s, identity_piece_below(s, c, dropped));
        if (a > 0.0) rep.lhs_terms.push_back({dropped, a});
    }
    // V_{k+1} pieces: P_k plus one non-owner, which is the site.
    for (int added = 0; added < s.size(); ++added) {
        if (std::binary_search(c.owners.begin(), c.owners.end(), added)) continue;
        double a = precise_area(s, identity_piece_above(s, c, added));
        if (a > 0.0) rep.rhs_terms.push_back({added, a});
    }

    Vec2 lhs{0, 0}, rhs{0, 0};
    for (const IdentityTerm& t : rep.lhs_terms) {
        lhs = lhs + s.pts[t.site] * t.cell_area;
        rep.lhs_area_sum += t.cell_area;
    }
    for (const IdentityTerm& t : rep.rhs_terms) {
        rhs = rhs + s.pts[t.site] * t.cell_area;
        rep.rhs_area_sum += t.cell_area;
    }
    rep.lhs_point = lhs / cell_area;
    rep.rhs_point = rhs / cell_area;
    rep.residual = dist(rep.lhs_point, rep.rhs_point);
    return rep;
}

Vec2 h_point(const CellIdentityReport& report) {
    return (report.lhs_point + report.rhs_point) / 2.0;
}

WeightVector generalized_weights_from(const PointSet& s, const Region& reg) {
    if (!reg.bounded) throw UnboundedRegion("generalized_weights: R_k(l) is clipped");
    if (reg.cells.empty()) throw UnboundedRegion("generalized_weights: empty region");

    WeightVector w;
    w.site = reg.site;
    w.k = reg.k;
    double denom = 0.0;
    for (const OrderKCell& c : reg.cells) {
        denom += precise_area(s, c.poly);
        for (int added = 0; added < s.size(); ++added) {
            if (std::binary_search(c.owners.begin(), c.owners.end(), added)) continue;
            double a = precise_area(s, identity_piece_above(s, c, added));
            if (a > 0.0) w.entries[added] += a;
        }
    }
    for (auto& [j, wj] : w.entries) wj /= denom;
    validate_weights(w);
    return w;
}

WeightVector generalized_weights(const PointSet& s, int k, int site, const BBox& bbox) {
    if (k < 1 || k > s.size() - 2) throw OrderOutOfRange("generalized_weights: need 1 <= k <= n-2");
    return generalized_weights_from(s, region(s, k, site, bbox));
}

std::array<double, 3> barycentric_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c) {
    double pa[2] = {a.x, a.y}, pb[2] = {b.x, b.y}, pc[2] = {c.x, c.y};
    if (orient2d(pa, pb, pc, Mode::Robust) == 0.0) throw Collinear("barycentric_triangle: collinear triangle");
    double denom = (b - a).cross(c - a);
    double la = (b - p).cross(c - p) / denom;
    double lb = (c - p).cross(a - p) / denom;
    double lc = (a - p).cross(b - p) / denom;
    double tol = 1e-12;
    if (la < -tol || lb < -tol || lc < -tol) throw OutsideTriangle("barycentric_triangle: point outside triangle");
    return {la, lb, lc};
}

namespace {

double triangle_area_abs(Vec2 a, Vec2 b, Vec2 c) { return 0.5 * std::fabs((b - a).cross(c - a)); }

void require_strictly_convex(const std::array<Vec2, 4>& q) {
    int sign = 0;
    for (int i = 0; i < 4; ++i) {
        Vec2 a = q[i], b = q[(i + 1) % 4], c = q[(i + 2) % 4];
        double cr = (b - a).cross(c - b);
        int s = cr > 0.0 ? 1 : (cr < 0.0 ? -1 : 0);
        if (s == 0 || (sign != 0 && s != sign)) throw NonConvexQuad("quad is not strictly convex in cyclic order");
        sign = s;
    }
}

}  // namespace

std::pair<Vec2, Vec2> quad_identity(Vec2 q1, Vec2 q2, Vec2 q3, Vec2 q4) {
    require_strictly_convex({q1, q2, q3, q4});
    double s234 = triangle_area_abs(q2, q3, q4);
    double s124 = triangle_area_abs(q1, q2, q4);
    double s134 = triangle_area_abs(q1, q3, q4);
    double s123 = triangle_area_abs(q1, q2, q3);
    Vec2 eq6 = (q1 * s234 + q3 * s124) / (s234 + s124);
    Vec2 eq7 = (q2 * s134 + q4 * s123) / (s134 + s123);
    return {eq6, eq7};
}

bool quad_identity_exact(Vec2 q1, Vec2 q2, Vec2 q3, Vec2 q4) {
    require_strictly_convex({q1, q2, q3, q4});
    using namespace expansion;
    auto twice_area = [](Vec2 a, Vec2 b, Vec2 c) {
        // ax by - ax cy - ay bx + ay cx + bx cy - by cx, exactly
        Exp r = from_product(a.x, b.y);
        r = sum(r, negate(from_product(a.x, c.y)));
        r = sum(r, negate(from_product(a.y, b.x)));
        r = sum(r, from_product(a.y, c.x));
        r = sum(r, from_product(b.x, c.y));
        r = sum(r, negate(from_product(b.y, c.x)));
        return r;
    };
    Exp s234 = twice_area(q2, q3, q4);
    Exp s124 = twice_area(q1, q2, q4);
    Exp s134 = twice_area(q1, q3, q4);
    Exp s123 = twice_area(q1, q2, q3);
    // For a CW ordering all four doubled areas flip sign, which cancels.
    auto side = [&](Vec2 p, const Exp& sp, Vec2 r, const Exp& sr, double Vec2::* coord) {
        return sum(scale(sp, p.*coord), scale(sr, r.*coord));
    };
    for (double Vec2::* coord : {&Vec2::x, &Vec2::y}) {
        Exp lhs = side(q1, s234, q3, s124, coord);
        Exp rhs = side(q2, s134, q4, s123, coord);
        if (!is_zero(sum(lhs, negate(rhs)))) return false;
    }
    return true;
}

ConvexPolygon bisector_cell_of_quad(const std::array<Vec2, 4>& q) {
    require_strictly_convex(q);
    std::vector<Vec2> centers = {
        circumcenter(q[0], q[1], q[2]),  // C_123
        circumcenter(q[0], q[1], q[3]),  // C_124
        circumcenter(q[0], q[2], q[3]),  // C_134
        circumcenter(q[1], q[2], q[3]),  // C_234
    };
    Vec2 mid{0, 0};
    for (const Vec2& c : centers) mid = mid + c;
    mid = mid / 4.0;
    std::sort(centers.begin(), centers.end(), [&](Vec2 a, Vec2 b) {
        return std::atan2(a.y - mid.y, a.x - mid.x) < std::atan2(b.y - mid.y, b.x - mid.x);
    });
    return ConvexPolygon::from_points(std::move(centers));
}

QuadAreaRatio quad_area_ratio(const std::array<Vec2, 4>& q, const ConvexPolygon& cell_poly) {
    require_strictly_convex(q);
    double cot[4];
    for (int i = 0; i < 4; ++i) {
        auto [cs, sn] = corner_cos_sin(q[(i + 3) % 4], q[i], q[(i + 1) % 4]);
        if (std::fabs(sn) < 1e-9) throw DegenerateAngles("quad_area_ratio: interior angle near 0 or pi");
        cot[i] = cs / std::fabs(sn);
    }
    double ac = cot[0] + cot[2];
    double bd = cot[1] + cot[3];
    // cot(a)+cot(g) == 0 <=> a+g == pi <=> the quad is cocircular and the
    // four bisectors are concurrent: no cell to measure.
    if (std::fabs(ac) < 1e-9 || std::fabs(bd) < 1e-9)
        throw DegenerateAngles("quad_area_ratio: cocircular quadrilateral, bisector cell degenerates");

    QuadAreaRatio r;
    r.formula = std::fabs(0.25 * ac * bd);
    double quad_area = triangle_area_abs(q[0], q[1], q[2]) + triangle_area_abs(q[0], q[2], q[3]);
    r.measured = area(cell_poly) / quad_area;
    return r;
}

std::vector<int> cell_generating_sites(const OrderKCell& c, const PointSet& s) {
    std::set<int> sites;
    for (const EdgeTag& t : c.poly.tags) {
        if (!t.is_bisector()) continue;
        sites.insert(t.a);
        sites.insert(t.b);
    }
    std::vector<int> out(sites.begin(), sites.end());
    Vec2 mid{0, 0};
    for (int i : out) mid = mid + s.pts[i];
    mid = mid / static_cast<double>(out.size());
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        return std::atan2(s.pts[a].y - mid.y, s.pts[a].x - mid.x) < std::atan2(s.pts[b].y - mid.y, s.pts[b].x - mid.x);
    });
    return out;
}

double induction_consistency_residual(const PointSet& s, int k, int site, const BBox& bbox) {
    if (k < 2 || k > s.size() - 2) throw OrderOutOfRange("induction_consistency: need 2 <= k <= n-2");
    OrderKDiagram below = build_diagram(s, k - 1, bbox);
    OrderKDiagram mid = build_diagram(s, k, bbox);

    Region rk = region_from(mid, site);
    Region rkm1 = region_from(below, site);
    if (!rk.bounded || !rkm1.bounded) throw UnboundedRegion("induction_consistency: region clipped");

    // Summed order-k identities over R_k(site), keeping the V_{k-1} sides
    // and dropping the reference site's own terms.
    std::map<int, double> summed;
    for (const OrderKCell& c : rk.cells) {
        CellIdentityReport rep = aurenhammer_identity(s, k, c);
        for (const IdentityTerm& t : rep.lhs_terms) {
            if (t.site != site) summed[t.site] += t.cell_area;
        }
    }
    // Direct order-(k-1) sum: V_k pieces of R_{k-1}(site) weighted by the
    // added site.
    std::map<int, double> direct;
    for (const OrderKCell& c : rkm1.cells) {
        for (int added = 0; added < s.size(); ++added) {
            if (std::binary_search(c.owners.begin(), c.owners.end(), added)) continue;
            double a = precise_area(s, identity_piece_above(s, c, added));
            if (a > 0.0) direct[added] += a;
        }
    }

    double denom = rkm1.total_area;
    double worst = 0.0;
    std::set<int> all;
    for (const auto& [j, v] : summed) all.insert(j);
    for (const auto& [j, v] : direct) all.insert(j);
    for (int j : all) {
        double a = summed.count(j) ? summed.at(j) : 0.0;
        double b = direct.count(j) ? direct.at(j) : 0.0;
        worst = std::max(worst, std::fabs(a - b) / denom);
    }
    return worst;
}

}  // namespace orderk
