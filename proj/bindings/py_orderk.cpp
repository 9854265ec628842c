#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orderk/coordinates.hpp"
#include "orderk/grid_oracle.hpp"
#include "orderk/interp1d.hpp"
#include "orderk/interp2d.hpp"
#include "orderk/pointset_io.hpp"
#include "orderk/svg.hpp"
#include "orderk/verify.hpp"

namespace py = pybind11;
using namespace orderk;

namespace {

PointSet pointset_from_rows(const std::vector<std::vector<double>>& rows, int dim) {
    std::vector<Vec2> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) {
        if (dim == 2) {
            if (r.size() != 2) throw DegenerateInput("dim=2 rows need two coordinates");
            pts.push_back({r[0], r[1]});
        } else {
            if (r.empty()) throw DegenerateInput("dim=1 rows need one coordinate");
            pts.push_back({r[0], 0.0});
        }
    }
    return PointSet(dim, std::move(pts));
}

std::vector<std::vector<double>> polygon_rows(const ConvexPolygon& p) {
    std::vector<std::vector<double>> out;
    out.reserve(p.v.size());
    for (const Vec2& v : p.v) out.push_back({v.x, v.y});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Order-k Voronoi diagrams, Sibson-style local coordinates and "
              "natural-neighbour interpolation";

    py::register_exception<Error>(m, "OrderkError", PyExc_ValueError);

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y)
        .def("__repr__", [](const Vec2& v) {
            return "Vec2(" + format_double(v.x) + ", " + format_double(v.y) + ")";
        });

    py::class_<PointSet>(m, "PointSet")
        .def(py::init(&pointset_from_rows), py::arg("points"), py::arg("dim") = 2)
        .def_readonly("dim", &PointSet::dim)
        .def("__len__", &PointSet::size)
        .def("diameter", &PointSet::diameter)
        .def("coords",
             [](const PointSet& s) {
                 std::vector<std::vector<double>> out;
                 for (const Vec2& p : s.pts) {
                     if (s.dim == 2)
                         out.push_back({p.x, p.y});
                     else
                         out.push_back({p.x});
                 }
                 return out;
             })
        .def("validate", [](const PointSet& s, const std::string& mode) {
            std::vector<std::string> out;
            for (const Violation& v : validate_general_position(s, mode == "float" ? Mode::Float : Mode::Robust))
                out.push_back(v.describe());
            return out;
        }, py::arg("mode") = "robust");

    py::class_<BBox>(m, "BBox")
        .def_readonly("xmin", &BBox::xmin)
        .def_readonly("ymin", &BBox::ymin)
        .def_readonly("xmax", &BBox::xmax)
        .def_readonly("ymax", &BBox::ymax)
        .def("area", &BBox::area);
    m.def("make_bbox", &make_bbox, py::arg("sites"), py::arg("scale") = 20.0);

    py::class_<OrderKCell>(m, "OrderKCell")
        .def_readonly("owners", &OrderKCell::owners)
        .def_readonly("k", &OrderKCell::k)
        .def_readonly("bounded", &OrderKCell::bounded)
        .def_property_readonly("area", [](const OrderKCell& c) { return area(c.poly); })
        .def_property_readonly("vertices", [](const OrderKCell& c) { return polygon_rows(c.poly); });

    py::class_<OrderKDiagram>(m, "OrderKDiagram")
        .def_readonly("k", &OrderKDiagram::k)
        .def_readonly("n", &OrderKDiagram::n)
        .def_readonly("cells", &OrderKDiagram::cells)
        .def("total_area", &OrderKDiagram::total_area)
        .def("to_json", &diagram_to_json);

    py::class_<Region>(m, "Region")
        .def_readonly("site", &Region::site)
        .def_readonly("k", &Region::k)
        .def_readonly("cells", &Region::cells)
        .def_readonly("total_area", &Region::total_area)
        .def_readonly("bounded", &Region::bounded);

    py::class_<WeightVector>(m, "WeightVector")
        .def_readonly("entries", &WeightVector::entries)
        .def_readonly("site", &WeightVector::site)
        .def_readonly("k", &WeightVector::k)
        .def("sum", &WeightVector::sum)
        .def("reconstruction_residual", &WeightVector::reconstruction_residual);

    py::class_<IdentityTerm>(m, "IdentityTerm")
        .def_readonly("site", &IdentityTerm::site)
        .def_readonly("cell_area", &IdentityTerm::cell_area);

    py::class_<CellIdentityReport>(m, "CellIdentityReport")
        .def_readonly("cell", &CellIdentityReport::cell)
        .def_readonly("lhs_terms", &CellIdentityReport::lhs_terms)
        .def_readonly("rhs_terms", &CellIdentityReport::rhs_terms)
        .def_readonly("cell_area", &CellIdentityReport::cell_area)
        .def_readonly("residual", &CellIdentityReport::residual)
        .def_property_readonly("lhs_point",
                               [](const CellIdentityReport& r) { return std::vector<double>{r.lhs_point.x, r.lhs_point.y}; })
        .def_property_readonly("rhs_point",
                               [](const CellIdentityReport& r) { return std::vector<double>{r.rhs_point.x, r.rhs_point.y}; })
        .def_property_readonly("h_point", [](const CellIdentityReport& r) {
            Vec2 h = h_point(r);
            return std::vector<double>{h.x, h.y};
        });

    m.def(
        "build_diagram",
        [](const PointSet& s, int k, double bbox_scale) {
            return build_diagram(s, k, make_bbox(s, bbox_scale));
        },
        py::arg("sites"), py::arg("k"), py::arg("bbox_scale") = 20.0);
    m.def(
        "region",
        [](const PointSet& s, int k, int site, double bbox_scale) {
            return region(s, k, site, make_bbox(s, bbox_scale));
        },
        py::arg("sites"), py::arg("k"), py::arg("site"), py::arg("bbox_scale") = 20.0);
    m.def(
        "region_nesting_check",
        [](const PointSet& s, int site, int kmax, double bbox_scale) {
            return region_nesting_check(s, site, kmax, make_bbox(s, bbox_scale));
        },
        py::arg("sites"), py::arg("site"), py::arg("kmax"), py::arg("bbox_scale") = 20.0);
    m.def("vertices_1d", &vertices_1d, py::arg("sites"), py::arg("k"));

    m.def(
        "sibson_weights",
        [](const PointSet& s, int site, double bbox_scale) {
            return sibson_weights(s, site, make_bbox(s, bbox_scale));
        },
        py::arg("sites"), py::arg("site"), py::arg("bbox_scale") = 20.0);
    m.def(
        "generalized_weights",
        [](const PointSet& s, int k, int site, double bbox_scale) {
            return generalized_weights(s, k, site, make_bbox(s, bbox_scale));
        },
        py::arg("sites"), py::arg("k"), py::arg("site"), py::arg("bbox_scale") = 20.0);
    m.def(
        "aurenhammer_identity",
        [](const PointSet& s, int k, const std::vector<int>& owners, double bbox_scale) {
            BBox bbox = make_bbox(s, bbox_scale);
            OrderKCell c = cell(s, owners, bbox);
            if (c.poly.empty()) throw InvalidSubset("aurenhammer_identity: the subset defines no cell");
            return aurenhammer_identity(s, k, c);
        },
        py::arg("sites"), py::arg("k"), py::arg("owners"), py::arg("bbox_scale") = 20.0);

    m.def("barycentric_triangle",
          [](std::pair<double, double> p, std::pair<double, double> a, std::pair<double, double> b,
             std::pair<double, double> c) {
              return barycentric_triangle({p.first, p.second}, {a.first, a.second}, {b.first, b.second},
                                          {c.first, c.second});
          });
    m.def("quad_identity", [](std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c,
                              std::pair<double, double> d) {
        auto [p, q] = quad_identity({a.first, a.second}, {b.first, b.second}, {c.first, c.second},
                                    {d.first, d.second});
        return std::make_pair(std::vector<double>{p.x, p.y}, std::vector<double>{q.x, q.y});
    });

    py::class_<InterpolationResult>(m, "InterpolationResult")
        .def_readonly("value", &InterpolationResult::value)
        .def_readonly("weights", &InterpolationResult::weights)
        .def_readonly("k", &InterpolationResult::k)
        .def_readonly("support", &InterpolationResult::support);

    m.def(
        "interpolate",
        [](const PointSet& sites, const std::vector<double>& values, std::pair<double, double> q, int k,
           double bbox_scale) {
            return interpolate(ScatterData(sites, values), {q.first, q.second}, k, bbox_scale);
        },
        py::arg("sites"), py::arg("values"), py::arg("query"), py::arg("k") = 1, py::arg("bbox_scale") = 20.0);
    m.def(
        "interpolate_multi",
        [](const PointSet& sites, const std::vector<double>& values, std::pair<double, double> q,
           const std::vector<int>& klist, double bbox_scale) {
            // one (result, error) pair per order; failures stay per-entry
            std::vector<std::pair<std::optional<InterpolationResult>, std::string>> out;
            for (const MultiResult& m2 :
                 interpolate_multi(ScatterData(sites, values), {q.first, q.second}, klist, bbox_scale))
                out.emplace_back(m2.result, m2.error);
            return out;
        },
        py::arg("sites"), py::arg("values"), py::arg("query"), py::arg("klist"), py::arg("bbox_scale") = 20.0);

    m.def("property_line", &property_line, py::arg("xs"));
    m.def(
        "g1", [](double x, const std::vector<double>& xs, const std::vector<double>& ys) { return g1(x, {xs, ys}); },
        py::arg("x"), py::arg("xs"), py::arg("ys"));
    m.def(
        "g2", [](double x, const std::vector<double>& xs, const std::vector<double>& ys) { return g2(x, {xs, ys}); },
        py::arg("x"), py::arg("xs"), py::arg("ys"));
    m.def(
        "g3", [](double x, const std::vector<double>& xs, const std::vector<double>& ys) { return g3(x, {xs, ys}); },
        py::arg("x"), py::arg("xs"), py::arg("ys"));
    m.def(
        "g2_raw",
        [](double x, const std::vector<double>& xs, const std::vector<double>& ys) { return g2_raw(x, {xs, ys}); },
        py::arg("x"), py::arg("xs"), py::arg("ys"));
    m.def(
        "g3_raw",
        [](double x, const std::vector<double>& xs, const std::vector<double>& ys) { return g3_raw(x, {xs, ys}); },
        py::arg("x"), py::arg("xs"), py::arg("ys"));
    m.def(
        "lemma1_check",
        [](const std::vector<double>& xs, int k) {
            return lemma1_check(Samples1D(xs, std::vector<double>(xs.size(), 0.0)), k);
        },
        py::arg("xs"), py::arg("k"));

    m.def(
        "render_svg",
        [](const OrderKDiagram& d, const PointSet& s) { return render_svg(d, s); },
        py::arg("diagram"), py::arg("sites"));
    m.def(
        "verify",
        [](const PointSet& s, int kmax, std::uint64_t seed, int grid, double bbox_scale) {
            VerifyOptions opts;
            opts.kmax = kmax;
            opts.seed = seed;
            opts.grid = grid;
            opts.bbox_scale = bbox_scale;
            VerificationReport r = run_verification(s, opts);
            std::vector<std::map<std::string, std::string>> out;
            for (const CheckResult& c : r.checks)
                out.push_back({{"name", c.name},
                               {"status", c.status},
                               {"residual", format_double(c.residual)},
                               {"tolerance", format_double(c.tolerance)},
                               {"detail", c.detail}});
            return out;
        },
        py::arg("sites"), py::arg("kmax") = 4, py::arg("seed") = 1, py::arg("grid") = 0,
        py::arg("bbox_scale") = 20.0);

    m.def("random_sites", &random_sites, py::arg("n"), py::arg("seed"));
}
