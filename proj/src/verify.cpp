#include "orderk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "orderk/coordinates.hpp"
#include "orderk/grid_oracle.hpp"
#include "orderk/interp1d.hpp"
#include "orderk/interp2d.hpp"
#include "orderk/rng.hpp"

namespace orderk {

namespace {

using Check = std::vector<CheckResult>;

// Random strictly convex quadrilateral in the unit square, CCW cyclic order.
std::array<Vec2, 4> random_convex_quad(SplitMix64& rng) {
    while (true) {
        std::array<Vec2, 4> q;
        for (Vec2& p : q) p = {rng.next_double(), rng.next_double()};
        Vec2 mid = (q[0] + q[1] + q[2] + q[3]) / 4.0;
        std::sort(q.begin(), q.end(),
                  [&](Vec2 a, Vec2 b) { return std::atan2(a.y - mid.y, a.x - mid.x) < std::atan2(b.y - mid.y, b.x - mid.x); });
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            Vec2 a = q[i], b = q[(i + 1) % 4], c = q[(i + 2) % 4];
            double cr = (b - a).cross(c - b);
            double scale = (b - a).norm() * (c - b).norm();
            if (cr <= 1e-3 * scale) ok = false;  // strictly convex, no sliver corners
        }
        if (ok) return q;
    }
}

Check check_tiling(const PointSet& s, const std::vector<OrderKDiagram>& diagrams) {
    double worst = 0.0;
    int count = 0;
    for (const OrderKDiagram& d : diagrams) {
        worst = std::max(worst, std::fabs(d.total_area() - d.bbox.area()) / d.bbox.area());
        ++count;
    }
    (void)s;
    return {CheckResult::pass_fail("tiling", worst, 1e-6, count)};
}

Check check_adjacency(const std::vector<OrderKDiagram>& diagrams) {
    int count = 0;
    int bad = 0;
    for (const OrderKDiagram& d : diagrams) {
        for (const OrderKCell& c : d.cells) {
            for (const EdgeTag& t : c.poly.tags) {
                if (!t.is_bisector()) continue;
                std::vector<int> nb = c.owners;
                std::replace(nb.begin(), nb.end(), t.a, t.b);
                std::sort(nb.begin(), nb.end());
                ++count;
                // neighbour differs in exactly one owner and must exist
                if (d.find(nb) == nullptr) ++bad;
            }
        }
    }
    return {CheckResult::pass_fail("edge-adjacency", static_cast<double>(bad), 0.0, count,
                                   "cell neighbours across edges differ in one owner")};
}

Check check_sibson(const PointSet& s, const std::vector<OrderKDiagram>& diagrams) {
    const OrderKDiagram& d1 = diagrams[0];
    double diam = s.diameter();
    double worst = 0.0;
    int count = 0;
    for (const OrderKCell& c : d1.cells) {
        if (!c.bounded) continue;
        WeightVector w = sibson_weights(s, c.owners[0], d1.bbox);
        worst = std::max(worst, w.reconstruction_residual(s) / diam);
        ++count;
    }
    if (count == 0) return {CheckResult::skipped("sibson-reconstruction", "no bounded order-1 cells")};
    return {CheckResult::pass_fail("sibson-reconstruction", worst, 1e-9, count)};
}

Check check_aurenhammer(const PointSet& s, const std::vector<OrderKDiagram>& diagrams, int kmax) {
    const int n = s.size();
    double diam = s.diameter();
    double worst_residual = 0.0;
    double worst_partition = 0.0;
    int count = 0;
    for (int k = 2; k <= std::min(kmax, n - 2); ++k) {
        for (const OrderKCell& c : diagrams[k - 1].cells) {
            if (!c.bounded) continue;
            CellIdentityReport rep = aurenhammer_identity(s, c.k, c);
            worst_residual = std::max(worst_residual, rep.residual / diam);
            worst_partition =
                std::max({worst_partition, std::fabs(rep.lhs_area_sum - rep.cell_area) / rep.cell_area,
                          std::fabs(rep.rhs_area_sum - rep.cell_area) / rep.cell_area});
            ++count;
        }
    }
    if (count == 0) return {CheckResult::skipped("aurenhammer-identity", "no bounded cells in 2 <= k <= n-2")};
    return {CheckResult::pass_fail("aurenhammer-identity", worst_residual, 1e-9, count),
            CheckResult::pass_fail("aurenhammer-partition", worst_partition, 1e-9, count)};
}

Check check_generalized(const PointSet& s, const std::vector<OrderKDiagram>& diagrams, int kmax) {
    const int n = s.size();
    double diam = s.diameter();
    double worst = 0.0;
    double worst_k1 = 0.0;
    int count = 0, count_k1 = 0;
    for (int k = 1; k <= std::min(kmax, n - 2); ++k) {
        for (int site = 0; site < n; ++site) {
            Region reg = region_from(diagrams[k - 1], site);
            if (!reg.bounded) continue;
            WeightVector w = generalized_weights_from(s, reg);
            worst = std::max(worst, w.reconstruction_residual(s) / diam);
            ++count;
            if (k == 1) {
                WeightVector ws = sibson_weights(s, site, diagrams[0].bbox);
                for (const auto& [j, wj] : ws.entries)
                    worst_k1 = std::max(worst_k1, std::fabs(wj - (w.entries.count(j) ? w.entries.at(j) : 0.0)));
                for (const auto& [j, wj] : w.entries)
                    if (!ws.entries.count(j)) worst_k1 = std::max(worst_k1, std::fabs(wj));
                ++count_k1;
            }
        }
    }
    if (count == 0) return {CheckResult::skipped("generalized-reconstruction", "no bounded regions")};
    Check out{CheckResult::pass_fail("generalized-reconstruction", worst, 1e-9, count)};
    if (count_k1 > 0) out.push_back(CheckResult::pass_fail("k1-equals-sibson", worst_k1, 1e-12, count_k1));
    return out;
}

Check check_nesting(const PointSet& s, const std::vector<OrderKDiagram>& diagrams, int kmax) {
    const int n = s.size();
    int bad = 0;
    int count = 0;
    int up_to = std::min(kmax, n - 1);
    for (int site = 0; site < n; ++site) {
        Region prev = region_from(diagrams[0], site);
        for (int k = 2; k <= up_to; ++k) {
            Region cur = region_from(diagrams[k - 1], site);
            for (const OrderKCell& c : prev.cells) {
                double covered = 0.0;
                for (const OrderKCell& big : cur.cells) covered += area(polygon_intersection(c.poly, big.poly));
                ++count;
                if (std::fabs(covered - area(c.poly)) > 1e-9 * std::max(area(c.poly), 1e-300)) ++bad;
            }
            prev = std::move(cur);
        }
    }
    return {CheckResult::pass_fail("region-nesting", static_cast<double>(bad), 0.0, count,
                                   "R_{k-1} contained in R_k")};
}

Check check_region_monotonicity(const PointSet& s, const std::vector<OrderKDiagram>& diagrams, int kmax) {
    const int n = s.size();
    double min_increase = 1e300;
    int count = 0;
    for (int site = 0; site < n; ++site) {
        double prev_area = -1.0;
        for (int k = 1; k <= std::min(kmax, n - 1); ++k) {
            Region r = region_from(diagrams[k - 1], site);
            if (!r.bounded) break;
            if (prev_area >= 0.0) {
                min_increase = std::min(min_increase, r.total_area - prev_area);
                ++count;
            }
            prev_area = r.total_area;
        }
    }
    if (count == 0) return {CheckResult::skipped("region-monotonicity", "no consecutive bounded regions")};
    double residual = min_increase > 0.0 ? 0.0 : 1.0;
    return {CheckResult::pass_fail("region-monotonicity", residual, 0.0, count, "area(R_k) strictly increasing")};
}

Check check_induction(const PointSet& s, const BBox& bbox, int kmax) {
    const int n = s.size();
    double worst = 0.0;
    int count = 0;
    for (int k = 2; k <= std::min(kmax, n - 2); ++k) {
        for (int site = 0; site < n; ++site) {
            try {
                worst = std::max(worst, induction_consistency_residual(s, k, site, bbox));
                ++count;
            } catch (const UnboundedRegion&) {
            }
        }
    }
    if (count == 0) return {CheckResult::skipped("induction-consistency", "no bounded region pairs")};
    return {CheckResult::pass_fail("induction-consistency", worst, 1e-9, count)};
}

Check check_cell_h_geometry(const PointSet& s, const std::vector<OrderKDiagram>& diagrams, int kmax) {
    const int n = s.size();
    double diam = s.diameter();
    double worst_quad = 0.0;
    int quads = 0;
    double worst_penta = 0.0;
    int pentas = 0;
    for (int k = 2; k <= std::min(kmax, n - 2); ++k) {
        const OrderKDiagram& d = diagrams[k - 1];
        for (const OrderKCell& c : d.cells) {
            if (!c.bounded) continue;
            std::vector<int> gens = cell_generating_sites(c, s);
            CellIdentityReport rep = aurenhammer_identity(s, k, c);
            Vec2 h = h_point(rep);
            if (c.poly.size() == 4 && gens.size() == 4) {
                // H is the diagonal intersection of the generating quad
                auto x = segment_intersection(s.pts[gens[0]], s.pts[gens[2]], s.pts[gens[1]], s.pts[gens[3]]);
                if (!x) continue;
                worst_quad = std::max(worst_quad, dist(h, *x) / diam);
                ++quads;
            } else if (c.poly.size() == 5 && gens.size() == 5 && rep.lhs_terms.size() == 2 &&
                       rep.rhs_terms.size() == 3) {
                // H on the segment of the two lhs sites...
                Vec2 a = s.pts[rep.lhs_terms[0].site], b = s.pts[rep.lhs_terms[1].site];
                Vec2 ab = b - a;
                double t = (h - a).dot(ab) / ab.norm2();
                double off_seg = dist(h, a + ab * std::clamp(t, 0.0, 1.0));
                // ...and its barycentric coordinates in the triangle of the
                // three rhs sites match the normalized rhs weights.
                Vec2 ta = s.pts[rep.rhs_terms[0].site], tb = s.pts[rep.rhs_terms[1].site],
                     tc = s.pts[rep.rhs_terms[2].site];
                double bary_mismatch;
                try {
                    auto bary = barycentric_triangle(h, ta, tb, tc);
                    double rhs_sum = rep.rhs_terms[0].cell_area + rep.rhs_terms[1].cell_area +
                                     rep.rhs_terms[2].cell_area;
                    bary_mismatch = std::max({std::fabs(bary[0] - rep.rhs_terms[0].cell_area / rhs_sum),
                                              std::fabs(bary[1] - rep.rhs_terms[1].cell_area / rhs_sum),
                                              std::fabs(bary[2] - rep.rhs_terms[2].cell_area / rhs_sum)});
                } catch (const OutsideTriangle&) {
                    bary_mismatch = 1.0;
                }
                worst_penta = std::max({worst_penta, off_seg / diam, bary_mismatch});
                ++pentas;
            }
        }
    }
    Check out;
    if (quads > 0)
        out.push_back(CheckResult::pass_fail("quad-cell-diagonal", worst_quad, 1e-9, quads));
    else
        out.push_back(CheckResult::skipped("quad-cell-diagonal", "no quadrilateral cells"));
    if (pentas > 0)
        out.push_back(CheckResult::pass_fail("pentagon-cell-split", worst_penta, 1e-9, pentas));
    else
        out.push_back(CheckResult::skipped("pentagon-cell-split", "no pentagonal cells"));
    return out;
}

Check check_quad_random(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst_h = 0.0;
    double worst_ratio = 0.0;
    int count = 1000;
    int exact_fail = 0;
    for (int i = 0; i < count; ++i) {
        auto q = random_convex_quad(rng);
        auto [eq6, eq7] = quad_identity(q[0], q[1], q[2], q[3]);
        auto x = segment_intersection(q[0], q[2], q[1], q[3]);
        if (x) worst_h = std::max({worst_h, dist(eq6, *x), dist(eq7, *x)});
        try {
            QuadAreaRatio r = quad_area_ratio(q, bisector_cell_of_quad(q));
            worst_ratio = std::max(worst_ratio, std::fabs(r.measured - r.formula));
        } catch (const DegenerateAngles&) {
            // cocircular draw; measure-zero event, skip
        }
        // dyadic (hence rational) coordinates keep the expansion check exact
        std::array<Vec2, 4> qr;
        for (int v = 0; v < 4; ++v)
            qr[v] = {std::floor(q[v].x * 4096.0) / 4096.0, std::floor(q[v].y * 4096.0) / 4096.0};
        try {
            if (!quad_identity_exact(qr[0], qr[1], qr[2], qr[3])) ++exact_fail;
        } catch (const NonConvexQuad&) {
            // rounding to the lattice may lose strict convexity; skip
        }
    }
    return {CheckResult::pass_fail("quad-identity-diagonal", worst_h, 1e-12, count),
            CheckResult::pass_fail("quad-cot-ratio", worst_ratio, 1e-9, count),
            CheckResult::pass_fail("quad-identity-exact", static_cast<double>(exact_fail), 0.0, count,
                                   "expansion arithmetic, rational inputs")};
}

Check check_barycentric_random(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst = 0.0;
    int count = 1000;
    for (int i = 0; i < count; ++i) {
        Vec2 a{rng.next_double(), rng.next_double()};
        Vec2 b{rng.next_double(), rng.next_double()};
        Vec2 c{rng.next_double(), rng.next_double()};
        if (std::fabs((b - a).cross(c - a)) < 1e-3) {
            --i;
            continue;
        }
        double u = rng.next_double(), v = rng.next_double();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        Vec2 p = a + (b - a) * u + (c - a) * v;
        auto l = barycentric_triangle(p, a, b, c);
        Vec2 rec = a * l[0] + b * l[1] + c * l[2];
        worst = std::max({worst, dist(rec, p), std::fabs(l[0] + l[1] + l[2] - 1.0)});
    }
    return {CheckResult::pass_fail("barycentric-reconstruction", worst, 1e-12, count)};
}

Check check_property_line(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst = 0.0;
    int count = 10000;
    for (int i = 0; i < count; ++i) {
        int l = 1 + static_cast<int>(rng.next_below(4));
        std::vector<double> xs(2 * l + 1);
        for (double& x : xs) x = rng.uniform(-10.0, 10.0);
        // half the draws sorted, half left unsorted (the identity needs no order)
        if (i % 2 == 0) std::sort(xs.begin(), xs.end());
        if (xs[2 * l] == xs[0]) continue;
        auto [lhs, rhs] = property_line(xs);
        double scale = 0.0;
        for (double x : xs) scale = std::max(scale, std::fabs(x));
        worst = std::max(worst, std::fabs(lhs - rhs) / std::max(scale, 1.0));
    }
    return {CheckResult::pass_fail("property-line", worst, 1e-12, count)};
}

Check check_interp1d(std::uint64_t seed) {
    SplitMix64 rng(seed);
    double worst_repro = 0.0;
    double worst_rel = 0.0;
    int count = 200;
    for (int i = 0; i < count; ++i) {
        int n = 8 + static_cast<int>(rng.next_below(8));
        std::vector<double> xs(n);
        for (double& x : xs) x = rng.uniform(0.0, 10.0);
        std::sort(xs.begin(), xs.end());
        bool dup = false;
        for (int j = 0; j + 1 < n; ++j)
            if (xs[j + 1] - xs[j] < 1e-6) dup = true;
        if (dup) {
            --i;
            continue;
        }
        double aa = rng.uniform(-2.0, 2.0), bb = rng.uniform(-2.0, 2.0);
        std::vector<double> lin(n), cst(n, 3.25);
        for (int j = 0; j < n; ++j) lin[j] = aa * xs[j] + bb;
        Samples1D slin(xs, lin), scst(xs, cst);
        int gap = 3 + static_cast<int>(rng.next_below(n - 6));  // ensure 3 samples each side
        double x = rng.uniform(xs[gap - 1], xs[gap]);
        if (x == xs[gap - 1] || x == xs[gap]) continue;
        double fx = aa * x + bb;
        double scale = std::max(1.0, std::fabs(fx));
        worst_repro = std::max({worst_repro, std::fabs(g1(x, slin) - fx) / scale, std::fabs(g2(x, slin) - fx) / scale,
                                std::fabs(g3(x, slin) - fx) / scale, std::fabs(g1(x, scst) - 3.25),
                                std::fabs(g2(x, scst) - 3.25), std::fabs(g3(x, scst) - 3.25)});

        // derivation identities relating the raw and combined estimates
        std::vector<double> ys(n);
        for (int j = 0; j < n; ++j) ys[j] = rng.uniform(-5.0, 5.0);
        Samples1D sr(xs, ys);
        double x0 = sr.xs[gap - 3], x1 = sr.xs[gap - 2], x2 = sr.xs[gap - 1], x3 = sr.xs[gap],
               x4 = sr.xs[gap + 1], x5 = sr.xs[gap + 2];
        double lhs2 = g2_raw(x, sr) + (x3 - x2) / (x4 - x1) * g1(x, sr);
        double rhs2 = (x4 - x1 + x3 - x2) / (x4 - x1) * g2(x, sr);
        double lhs3 = g3_raw(x, sr) + (x4 - x1) / (x5 - x0) * g2_raw(x, sr) + (x3 - x2) / (x5 - x0) * g1(x, sr);
        double rhs3 = (x5 - x0 + x4 - x1 + x3 - x2) / (x5 - x0) * g3(x, sr);
        double yscale = 1.0;
        for (double yv : ys) yscale = std::max(yscale, std::fabs(yv));
        worst_rel = std::max({worst_rel, std::fabs(lhs2 - rhs2) / yscale, std::fabs(lhs3 - rhs3) / yscale});
    }
    return {CheckResult::pass_fail("interp1d-reproduction", worst_repro, 1e-12, count),
            CheckResult::pass_fail("interp1d-derivation", worst_rel, 1e-12, count)};
}

Check check_lemma1(std::uint64_t seed) {
    SplitMix64 rng(seed);
    int count = 0;
    int bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 6 + static_cast<int>(rng.next_below(15));
        PointSet s = random_sites_1d(n, rng.next_u64());
        Samples1D samples(s.xs(), std::vector<double>(n, 0.0));
        for (int k = 2; k <= n - 2; ++k) {
            try {
                ++count;
                if (!lemma1_check(samples, k)) ++bad;
            } catch (const DegenerateInput&) {
                --count;  // repeated midpoints: excluded by assumption
            }
        }
    }
    return {CheckResult::pass_fail("lemma1-interleaving", static_cast<double>(bad), 0.0, count)};
}

Check check_interp2d(const PointSet& s, std::uint64_t seed, double bbox_scale) {
    SplitMix64 rng(seed);
    double worst = 0.0;
    int count = 0;
    const double a = 0.75, b = -1.25, c0 = 2.0;
    std::vector<double> values;
    values.reserve(s.size());
    for (const Vec2& p : s.pts) values.push_back(a * p.x + b * p.y + c0);
    ScatterData data(s, values);
    Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
    for (const Vec2& p : s.pts) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    double fscale = std::max({1.0, std::fabs(a * hi.x), std::fabs(b * hi.y), std::fabs(c0)});
    for (int trial = 0; trial < 40 && count < 12; ++trial) {
        Vec2 q{rng.uniform(lo.x + 0.3 * (hi.x - lo.x), hi.x - 0.3 * (hi.x - lo.x)),
               rng.uniform(lo.y + 0.3 * (hi.y - lo.y), hi.y - 0.3 * (hi.y - lo.y))};
        for (int k = 1; k <= std::min(3, s.size() - 1); ++k) {
            try {
                InterpolationResult r = interpolate(data, q, k, bbox_scale);
                worst = std::max(worst, std::fabs(r.value - (a * q.x + b * q.y + c0)) / fscale);
                ++count;
            } catch (const Error&) {
                // query near the hull or degenerate; try another draw
            }
        }
    }
    if (count == 0) return {CheckResult::skipped("interp2d-linear-field", "no interior query succeeded")};
    return {CheckResult::pass_fail("interp2d-linear-field", worst, 1e-9, count)};
}

Check check_grid(const PointSet& s, const std::vector<OrderKDiagram>& diagrams, int kmax, int grid) {
    const int n = s.size();
    double worst_area = 0.0;
    int regions = 0;
    for (int k = 1; k <= std::min(kmax, n - 1); ++k) {
        for (int site = 0; site < n; ++site) {
            Region r = region_from(diagrams[k - 1], site);
            if (!r.bounded || r.cells.empty()) continue;
            BBox w = region_window(r);
            double est = oracle_region_area(s, k, site, w, grid);
            worst_area = std::max(worst_area, std::fabs(est - r.total_area) / r.total_area);
            ++regions;
        }
    }
    double worst_own = 0.0;
    for (const OrderKDiagram& d : diagrams) worst_own = std::max(worst_own, oracle_ownership_disagreement(s, d, grid));
    Check out;
    if (regions > 0)
        out.push_back(CheckResult::pass_fail("grid-region-areas", worst_area, 0.01, regions));
    else
        out.push_back(CheckResult::skipped("grid-region-areas", "no bounded regions"));
    out.push_back(CheckResult::pass_fail("grid-ownership", worst_own, 1e-4,
                                         static_cast<int>(diagrams.size())));
    return out;
}

}  // namespace

VerificationReport run_verification(const PointSet& sites, const VerifyOptions& opts) {
    VerificationReport report;

    auto violations = validate_general_position(sites, opts.mode);
    if (!violations.empty()) {
        CheckResult gp;
        gp.name = "general-position";
        gp.status = "fail";
        gp.residual = static_cast<double>(violations.size());
        gp.count = sites.size();
        gp.detail = violations.front().describe();
        report.checks.push_back(gp);
        for (const char* name : {"tiling", "edge-adjacency", "sibson-reconstruction", "aurenhammer-identity",
                                 "generalized-reconstruction", "region-nesting", "induction-consistency"})
            report.checks.push_back(CheckResult::skipped(name, "degenerate input"));
        // input-independent identity checks still run
        auto quad = check_quad_random(opts.seed + 101);
        auto bary = check_barycentric_random(opts.seed + 102);
        auto line = check_property_line(opts.seed + 103);
        auto i1 = check_interp1d(opts.seed + 104);
        auto l1 = check_lemma1(opts.seed + 105);
        for (auto* chk : {&quad, &bary, &line, &i1, &l1})
            report.checks.insert(report.checks.end(), chk->begin(), chk->end());
        return report;
    }
    report.checks.push_back(CheckResult::pass_fail("general-position", 0.0, 0.0, sites.size()));

    if (sites.dim == 1) {
        // 1-D input: the order-k structure is the midpoint lattice; run the
        // line identity, interleaving and interpolant checks only.
        const int n1 = sites.size();
        Samples1D samples(sites.xs(), std::vector<double>(n1, 0.0));
        int count = 0, bad = 0;
        for (int k = 2; k <= n1 - 2; ++k) {
            try {
                ++count;
                if (!lemma1_check(samples, k)) ++bad;
            } catch (const DegenerateInput&) {
                --count;
            }
        }
        if (count > 0)
            report.checks.push_back(
                CheckResult::pass_fail("lemma1-input", static_cast<double>(bad), 0.0, count));
        else
            report.checks.push_back(CheckResult::skipped("lemma1-input", "degenerate midpoints or n < 4"));
        auto quad = check_quad_random(opts.seed + 101);
        auto bary = check_barycentric_random(opts.seed + 102);
        auto line = check_property_line(opts.seed + 103);
        auto i1 = check_interp1d(opts.seed + 104);
        auto l1 = check_lemma1(opts.seed + 105);
        for (auto* chk : {&quad, &bary, &line, &i1, &l1})
            report.checks.insert(report.checks.end(), chk->begin(), chk->end());
        return report;
    }

    const int n = sites.size();
    BBox bbox = make_bbox(sites, opts.bbox_scale);
    int max_order = std::min(std::max(opts.kmax + 1, 2), n - 1);
    std::vector<OrderKDiagram> diagrams;
    diagrams.reserve(max_order);
    for (int k = 1; k <= max_order; ++k)
        diagrams.push_back(build_diagram(sites, k, bbox, EnumerationStrategy::Auto, false));

    // independent checks fan out; merge order is fixed
    std::vector<std::future<Check>> futs;
    auto spawn = [&](auto fn) { futs.push_back(std::async(std::launch::async, fn)); };
    spawn([&] { return check_tiling(sites, diagrams); });
    spawn([&] { return check_adjacency(diagrams); });
    spawn([&] { return check_sibson(sites, diagrams); });
    spawn([&] { return check_aurenhammer(sites, diagrams, opts.kmax); });
    spawn([&] { return check_generalized(sites, diagrams, opts.kmax); });
    spawn([&] { return check_nesting(sites, diagrams, opts.kmax); });
    spawn([&] { return check_region_monotonicity(sites, diagrams, opts.kmax); });
    spawn([&] { return check_induction(sites, bbox, opts.kmax); });
    spawn([&] { return check_cell_h_geometry(sites, diagrams, opts.kmax); });
    spawn([&] { return check_quad_random(opts.seed + 101); });
    spawn([&] { return check_barycentric_random(opts.seed + 102); });
    spawn([&] { return check_property_line(opts.seed + 103); });
    spawn([&] { return check_interp1d(opts.seed + 104); });
    spawn([&] { return check_lemma1(opts.seed + 105); });
    spawn([&] { return check_interp2d(sites, opts.seed + 106, opts.bbox_scale); });
    if (opts.grid > 0) spawn([&] { return check_grid(sites, diagrams, opts.kmax, opts.grid); });

    for (auto& f : futs) {
        Check c = f.get();
        report.checks.insert(report.checks.end(), c.begin(), c.end());
    }
    return report;
}

}  // namespace orderk
