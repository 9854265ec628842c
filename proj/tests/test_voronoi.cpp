#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "orderk/grid_oracle.hpp"
#include "orderk/pointset_io.hpp"
#include "orderk/voronoi.hpp"
#include "oracles.hpp"

using namespace orderk;

namespace {

const PointSet kFive(2, {{0.13, 0.22}, {0.87, 0.18}, {0.52, 0.55}, {0.2, 0.83}, {0.78, 0.8}});

PointSet ten_sites() { return random_sites(10, 424242); }

}  // namespace

TEST_CASE("two sites, k=1: the cell is the half-plane clipped to the box") {
    PointSet s(2, {{-1, 0}, {1, 0}});
    BBox bbox = make_bbox(s);
    OrderKCell c = cell(s, {0}, bbox);
    REQUIRE(!c.poly.empty());
    CHECK(c.poly.clipped);
    CHECK(!c.bounded);
    CHECK(area(c.poly) == doctest::Approx(0.5 * bbox.area()));
    // everything in the cell is left of the bisector x = 0
    for (const Vec2& v : c.poly.v) CHECK(v.x <= 1e-9);
}

TEST_CASE("equilateral sites, k=2: the three pair cells tile the box") {
    PointSet s(2, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
    BBox bbox = make_bbox(s);
    OrderKDiagram d = build_diagram(s, 2, bbox);
    CHECK(d.cells.size() == 3);
    CHECK(d.total_area() == doctest::Approx(bbox.area()).epsilon(1e-6));

    // grid oracle: every sampled point's 2-nearest set is a diagram cell
    SplitMix64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        Vec2 q{rng.uniform(bbox.xmin, bbox.xmax), rng.uniform(bbox.ymin, bbox.ymax)};
        auto owners = oracle::brute_k_nearest(s, q, 2);
        const OrderKCell* c = d.find(owners);
        REQUIRE(c != nullptr);
        CHECK(contains_point(c->poly, q, 1e-9 * bbox.side()));
    }
}

TEST_CASE("a subset that is never the k nearest defines an Empty cell") {
    // near-collinear chain: the two extreme sites are never the two nearest
    PointSet s(2, {{0, 0}, {1, 0.01}, {2, -0.01}, {3, 0.005}});
    BBox bbox = make_bbox(s);
    OrderKCell c = cell(s, {0, 3}, bbox);
    CHECK(c.poly.empty());

    // oracle confirms: no sampled point has {0, 3} as its 2 nearest
    SplitMix64 rng(17);
    for (int i = 0; i < 4000; ++i) {
        Vec2 q{rng.uniform(bbox.xmin, bbox.xmax), rng.uniform(bbox.ymin, bbox.ymax)};
        CHECK(oracle::brute_k_nearest(s, q, 2) != std::vector<int>{0, 3});
    }
}

TEST_CASE("cell rejects malformed subsets") {
    BBox bbox = make_bbox(kFive);
    CHECK_THROWS_AS(cell(kFive, {0, 0}, bbox), InvalidSubset);
    CHECK_THROWS_AS(cell(kFive, {0, 9}, bbox), InvalidSubset);
    CHECK_THROWS_AS(cell(kFive, {}, bbox), InvalidSubset);
    CHECK_THROWS_AS(cell(kFive, {0, 1, 2, 3, 4}, bbox), InvalidSubset);  // k = n
}

TEST_CASE("three sites, k=2: exactly three cells") {
    PointSet s(2, {{0.1, 0.1}, {0.95, 0.2}, {0.4, 0.9}});
    OrderKDiagram d = build_diagram(s, 2, make_bbox(s));
    CHECK(d.cells.size() == 3);
}

TEST_CASE("five-point set: diagrams for k=1..3 match the grid oracle combinatorially") {
    BBox bbox = make_bbox(kFive);
    for (int k = 1; k <= 3; ++k) {
        OrderKDiagram d = build_diagram(kFive, k, bbox);
        CHECK(d.total_area() == doctest::Approx(bbox.area()).epsilon(1e-6));

        // every cell's interior witness has exactly the owners as k nearest
        for (const OrderKCell& c : d.cells) {
            Vec2 w = interior_witness(c.poly, 1e-9 * bbox.side());
            CHECK(oracle::brute_k_nearest(kFive, w, k) == c.owners);
        }
        // every sampled label corresponds to a containing cell
        SplitMix64 rng(100 + k);
        for (int i = 0; i < 3000; ++i) {
            Vec2 q{rng.uniform(bbox.xmin, bbox.xmax), rng.uniform(bbox.ymin, bbox.ymax)};
            auto owners = oracle::brute_k_nearest(kFive, q, k);
            const OrderKCell* c = d.find(owners);
            REQUIRE(c != nullptr);
            CHECK(contains_point(c->poly, q, 1e-9 * bbox.side()));
        }
    }
}

TEST_CASE("random ten-site set: every diagram order verifies against the witness oracle") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    for (int k = 1; k <= 9; ++k) {
        OrderKDiagram d = build_diagram(s, k, bbox);
        CHECK(d.total_area() == doctest::Approx(bbox.area()).epsilon(1e-6));
        for (const OrderKCell& c : d.cells) {
            Vec2 w = interior_witness(c.poly, 1e-9 * bbox.side());
            CHECK(oracle::brute_k_nearest(s, w, k) == c.owners);
        }
    }
}

TEST_CASE("adjacent cells across an edge differ in exactly one owner") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    for (int k = 2; k <= 4; ++k) {
        OrderKDiagram d = build_diagram(s, k, bbox);
        for (const OrderKCell& c : d.cells) {
            for (const EdgeTag& t : c.poly.tags) {
                if (t.is_bbox()) continue;
                std::vector<int> nb = c.owners;
                std::replace(nb.begin(), nb.end(), t.a, t.b);
                std::sort(nb.begin(), nb.end());
                // the neighbour exists and differs in exactly the swapped owner
                CHECK(d.find(nb) != nullptr);
                int differing = 0;
                for (int o : c.owners)
                    if (!std::binary_search(nb.begin(), nb.end(), o)) ++differing;
                CHECK(differing == 1);
            }
        }
    }
}

TEST_CASE("exhaustive and flood-fill enumeration agree") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    for (int k : {2, 4, 6}) {
        OrderKDiagram ex = build_diagram(s, k, bbox, EnumerationStrategy::Exhaustive);
        OrderKDiagram ff = build_diagram(s, k, bbox, EnumerationStrategy::FloodFill);
        REQUIRE(ex.cells.size() == ff.cells.size());
        for (std::size_t i = 0; i < ex.cells.size(); ++i) {
            CHECK(ex.cells[i].owners == ff.cells[i].owners);
            CHECK(area(ex.cells[i].poly) == doctest::Approx(area(ff.cells[i].poly)).epsilon(1e-12));
        }
    }
}

TEST_CASE("flood-fill covers well-separated clusters") {
    SplitMix64 rng(5);
    std::vector<Vec2> pts;
    for (int i = 0; i < 12; ++i) pts.push_back({rng.next_double() * 0.2, rng.next_double() * 0.2});
    for (int i = 0; i < 12; ++i) pts.push_back({5.0 + rng.next_double() * 0.2, 5.0 + rng.next_double() * 0.2});
    pts.push_back({2.5, 2.6});
    PointSet s(2, std::move(pts));
    REQUIRE(validate_general_position(s).empty());
    BBox bbox = make_bbox(s);
    for (int k : {2, 3}) {
        OrderKDiagram ex = build_diagram(s, k, bbox, EnumerationStrategy::Exhaustive);
        OrderKDiagram ff = build_diagram(s, k, bbox, EnumerationStrategy::FloodFill);
        REQUIRE(ex.cells.size() == ff.cells.size());
        for (std::size_t i = 0; i < ex.cells.size(); ++i) CHECK(ex.cells[i].owners == ff.cells[i].owners);
    }
}

TEST_CASE("a bounded cell near the carrier raises BBoxTooSmall; a larger box resolves it") {
    // this configuration has a far circumcenter from a near-collinear
    // triple, putting a bounded cell within the margin of the default box
    PointSet s = random_sites(10, 108);
    bool tripped = false;
    try {
        for (int k = 1; k <= 9; ++k) build_diagram(s, k, make_bbox(s, 20.0));
    } catch (const BBoxTooSmall&) {
        tripped = true;
    }
    CHECK(tripped);
    for (int k = 1; k <= 9; ++k) CHECK_NOTHROW(build_diagram(s, k, make_bbox(s, 40.0)));
}

TEST_CASE("build_diagram validates input") {
    PointSet square(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK_THROWS_AS(build_diagram(square, 1, make_bbox(square)), DegenerateInput);
    CHECK_THROWS_AS(build_diagram(kFive, 0, make_bbox(kFive)), OrderOutOfRange);
    CHECK_THROWS_AS(build_diagram(kFive, 5, make_bbox(kFive)), OrderOutOfRange);
}

TEST_CASE("region: k=1 is the single order-1 cell") {
    BBox bbox = make_bbox(kFive);
    Region r = region(kFive, 1, 2, bbox);
    REQUIRE(r.cells.size() == 1);
    CHECK(r.cells[0].owners == std::vector<int>{2});
    CHECK(r.total_area == doctest::Approx(area(r.cells[0].poly)));
}

TEST_CASE("R_1 is contained in R_2 (area exhaustion)") {
    BBox bbox = make_bbox(kFive);
    for (int site = 0; site < kFive.size(); ++site) {
        Region r1 = region(kFive, 1, site, bbox);
        Region r2 = region(kFive, 2, site, bbox);
        for (const OrderKCell& c : r1.cells) {
            double covered = 0.0;
            for (const OrderKCell& big : r2.cells) covered += area(polygon_intersection(c.poly, big.poly));
            CHECK(covered == doctest::Approx(area(c.poly)).epsilon(1e-9));
        }
        CHECK(r2.total_area > r1.total_area);
    }
}

TEST_CASE("region area agrees with the grid oracle within 1%") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    int checked = 0;
    for (int k = 1; k <= 3; ++k) {
        for (int site = 0; site < s.size() && checked < 6; ++site) {
            Region r = region(s, k, site, bbox);
            if (!r.bounded) continue;
            BBox w = region_window(r);
            double est = oracle_region_area(s, k, site, w, 1200);
            CHECK(std::fabs(est - r.total_area) <= 0.01 * r.total_area);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("dense-grid ownership agrees with the constructed cells") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    OrderKDiagram d = build_diagram(s, 3, bbox);
    CHECK(oracle_ownership_disagreement(s, d, 2000) <= 1e-4);
}

TEST_CASE("cells of one diagram have pairwise zero-area overlap") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    for (int k : {1, 3}) {
        OrderKDiagram d = build_diagram(s, k, bbox);
        for (std::size_t i = 0; i < d.cells.size(); ++i)
            for (std::size_t j = i + 1; j < d.cells.size(); ++j) {
                double overlap = area(polygon_intersection(d.cells[i].poly, d.cells[j].poly));
                CHECK(overlap <=
                      1e-10 * std::max(area(d.cells[i].poly), area(d.cells[j].poly)));
            }
    }
}

TEST_CASE("ten-site fixture: nested regions of site 1 up to order 3") {
    PointSetFile f = load_pointset(std::string(ORDERK_FIXTURE_DIR) + "/ten_sites.csv");
    BBox bbox = make_bbox(f.points);
    CHECK(region_nesting_check(f.points, 1, 3, bbox));
    double prev = 0.0;
    for (int k = 1; k <= 3; ++k) {
        Region r = region(f.points, k, 1, bbox);
        CHECK(r.bounded);
        CHECK(r.total_area > prev);
        prev = r.total_area;
    }
}

TEST_CASE("region_nesting_check holds on random sets") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PointSet s = random_sites(12, seed * 7919);
        BBox bbox = make_bbox(s);
        for (int site : {0, 5, 11}) CHECK(region_nesting_check(s, site, 4, bbox));
    }
    // trivial case: n=3, kmax=2
    PointSet s3(2, {{0.1, 0.1}, {0.95, 0.2}, {0.4, 0.9}});
    for (int site = 0; site < 3; ++site) CHECK(region_nesting_check(s3, site, 2, make_bbox(s3)));
}

TEST_CASE("region area is strictly increasing in k while bounded") {
    PointSet s = ten_sites();
    BBox bbox = make_bbox(s);
    for (int site = 0; site < s.size(); ++site) {
        double prev = -1.0;
        for (int k = 1; k <= 5; ++k) {
            Region r = region(s, k, site, bbox);
            if (!r.bounded) break;
            if (prev >= 0.0) CHECK(r.total_area > prev);
            prev = r.total_area;
        }
    }
}

TEST_CASE("vertices_1d: midpoint structure") {
    CHECK(vertices_1d(PointSet::from_1d({0, 1}), 1) == std::vector<double>{0.5});
    CHECK(vertices_1d(PointSet::from_1d({0, 1, 2, 3}), 2) == std::vector<double>{1.0, 2.0});

    PointSet s = random_sites_1d(20, 99);
    for (int k = 1; k <= 19; ++k) CHECK(vertices_1d(s, k).size() == static_cast<std::size_t>(20 - k));

    // interleaving: each bounded order-k cell holds one vertex of each
    // adjacent order strictly inside
    for (int k = 2; k <= 18; ++k) {
        auto vk = vertices_1d(s, k), vm = vertices_1d(s, k - 1), vp = vertices_1d(s, k + 1);
        for (std::size_t i = 0; i + 1 < vk.size(); ++i) {
            auto count_inside = [&](const std::vector<double>& v) {
                int c = 0;
                for (double t : v)
                    if (t > vk[i] && t < vk[i + 1]) ++c;
                return c;
            };
            CHECK(count_inside(vm) == 1);
            CHECK(count_inside(vp) == 1);
        }
    }
}

TEST_CASE("interior_witness stays inside, even for sliver-ish polygons") {
    SplitMix64 rng(41);
    for (int i = 0; i < 100; ++i) {
        ConvexPolygon p = oracle::random_convex_polygon(rng, 3 + static_cast<int>(rng.next_below(6)));
        Vec2 w = interior_witness(p, 1e-9);
        CHECK(contains_point(p, w, 0.0));
    }
}
