#include <algorithm>
#include <cstdio>
#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orderk/coordinates.hpp"
#include "orderk/grid_oracle.hpp"
#include "orderk/interp1d.hpp"
#include "orderk/interp2d.hpp"
#include "orderk/pointset_io.hpp"
#include "orderk/svg.hpp"
#include "orderk/verify.hpp"

using namespace orderk;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

Vec2 parse_query(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("--query expects 'x,y'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("--query expects 'x,y'");
    }
}

Mode parse_mode(const std::string& text) {
    if (text == "float") return Mode::Float;
    if (text == "robust") return Mode::Robust;
    if (text.empty()) return mode_from_env(Mode::Robust);
    throw ParseError("--mode must be 'float' or 'robust'");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_file(out_path, content);
}

std::string weights_body(const WeightVector& w) {
    std::string out;
    for (const auto& [j, wj] : w.entries) out += "  w[" + std::to_string(j) + "] = " + format_double(wj) + "\n";
    return out;
}

std::string weights_text(const WeightVector& w, const PointSet& s) {
    std::string out = "site " + std::to_string(w.site) + "  k " + std::to_string(w.k) + "\n";
    out += weights_body(w);
    out += "sum " + format_double(w.sum()) + "  reconstruction-residual " +
           format_double(w.reconstruction_residual(s)) + "\n";
    return out;
}

std::string interp_text(const InterpolationResult& r, const ScatterData& data) {
    std::string out = "k " + std::to_string(r.k) + "  value " + format_double(r.value) + "\n";
    out += weights_body(r.weights);
    out += "sum " + format_double(r.weights.sum()) + "  query-residual " +
           format_double(r.query_residual(data)) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order-k Voronoi diagrams, local coordinates and natural-neighbour interpolation"};
    app.require_subcommand(1);

    std::string input, out_path, svg_path, mode_str, query_str, klist_str;
    int k = 1, kmax = 4, site = 0, random_n = 0, grid = 0;
    double bbox_scale = 20.0, query_x = 0.0;
    std::uint64_t seed = 1;
    bool emit_csv = false;
    std::string emit_curve;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("--input", input, "point set file (CSV or JSON)");
        cmd->add_option("--mode", mode_str, "exactness mode: float|robust (default: ORDERK_MODE or robust)");
        cmd->add_option("--bbox-scale", bbox_scale, "bounding box side as a multiple of the set diameter")
            ->default_val(20.0);
        cmd->add_option("--out", out_path, "write the primary output to this file instead of stdout");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "construct the order-k diagram of a point set");
    add_common(cmd_build);
    cmd_build->get_option("--input")->required();
    cmd_build->add_option("--k", k, "diagram order")->required()->check(CLI::PositiveNumber);
    cmd_build->add_option("--svg", svg_path, "also render the diagram to this SVG file");

    CLI::App* cmd_region = app.add_subcommand("region", "cells of the order-k region of one site");
    add_common(cmd_region);
    cmd_region->get_option("--input")->required();
    cmd_region->add_option("--k", k, "region order")->required()->check(CLI::PositiveNumber);
    cmd_region->add_option("--l", site, "site index")->required();

    CLI::App* cmd_coords = app.add_subcommand("coords", "region-based coordinates of one site");
    add_common(cmd_coords);
    cmd_coords->get_option("--input")->required();
    cmd_coords->add_option("--k", k, "coordinate order (1 = classical)")->default_val(1)->check(CLI::PositiveNumber);
    cmd_coords->add_option("--l", site, "site index")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the identity and oracle verification suite");
    add_common(cmd_verify);
    std::string random_spec, oracle_kind;
    cmd_verify->add_option("--random", random_spec,
                           "verify a seeded random set of this size instead of --input (accepts 10 or n=10)");
    cmd_verify->add_option("--kmax", kmax, "highest order exercised")->default_val(4);
    cmd_verify->add_option("--seed", seed, "seed for generated sets and randomized checks")->default_val(1);
    cmd_verify->add_option("--grid", grid, "grid-oracle resolution per axis (0 = off)")->default_val(0);
    cmd_verify->add_option("--oracle", oracle_kind, "extra oracle to run: 'grid' (resolution from --grid, default 2000)");

    CLI::App* cmd_interp = app.add_subcommand("interp", "natural-neighbour interpolation at a query point");
    add_common(cmd_interp);
    cmd_interp->get_option("--input")->required();
    cmd_interp->add_option("--query", query_str, "query point 'x,y'")->required();
    cmd_interp->add_option("--k", k, "interpolation order")->default_val(1)->check(CLI::PositiveNumber);
    cmd_interp->add_option("--klist", klist_str, "comma-separated list of orders (overrides --k)");
    cmd_interp->add_flag("--csv", emit_csv, "emit one CSV row per (query, k)");

    CLI::App* cmd_interp1d = app.add_subcommand("interp1d", "1-D interpolants g1, g2, g3 at a query");
    add_common(cmd_interp1d);
    cmd_interp1d->get_option("--input")->required();
    cmd_interp1d->add_option("--x", query_x, "query abscissa")->required();
    cmd_interp1d->add_option("--emit-curve", emit_curve, "write a CSV sweep of (x2, x3) to this file");

    CLI::App* cmd_render = app.add_subcommand("render", "render the order-k diagram as SVG");
    add_common(cmd_render);
    cmd_render->get_option("--input")->required();
    cmd_render->add_option("--k", k, "diagram order")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Mode mode = parse_mode(mode_str);

        if (cmd_build->parsed() || cmd_render->parsed()) {
            PointSetFile f = load_pointset(input);
            BBox bbox = make_bbox(f.points, bbox_scale);
            OrderKDiagram d = build_diagram(f.points, k, bbox);
            if (cmd_render->parsed()) {
                emit(out_path, render_svg(d, f.points));
            } else {
                emit(out_path, diagram_to_json(d));
                if (!svg_path.empty()) write_file(svg_path, render_svg(d, f.points));
            }
            return kExitPass;
        }

        if (cmd_region->parsed()) {
            PointSetFile f = load_pointset(input);
            BBox bbox = make_bbox(f.points, bbox_scale);
            Region r = region(f.points, k, site, bbox);
            std::string out = "site " + std::to_string(site) + "  k " + std::to_string(k) + "  cells " +
                              std::to_string(r.cells.size()) + "  area " + format_double(r.total_area) +
                              (r.bounded ? "  bounded\n" : "  unbounded\n");
            for (const OrderKCell& c : r.cells) {
                out += "  {";
                for (std::size_t i = 0; i < c.owners.size(); ++i)
                    out += (i ? "," : "") + std::to_string(c.owners[i]);
                out += "} area " + format_double(area(c.poly)) + "\n";
            }
            emit(out_path, out);
            return kExitPass;
        }

        if (cmd_coords->parsed()) {
            PointSetFile f = load_pointset(input);
            BBox bbox = make_bbox(f.points, bbox_scale);
            WeightVector w = generalized_weights(f.points, k, site, bbox);
            emit(out_path, weights_text(w, f.points));
            return kExitPass;
        }

        if (cmd_verify->parsed()) {
            if (!random_spec.empty()) {
                std::string digits = random_spec.rfind("n=", 0) == 0 ? random_spec.substr(2) : random_spec;
                try {
                    random_n = std::stoi(digits);
                } catch (const std::exception&) {
                    throw ParseError("--random expects a count, e.g. 10 or n=10");
                }
                if (random_n < 3) throw ParseError("--random needs at least 3 sites");
            }
            if (!oracle_kind.empty()) {
                if (oracle_kind != "grid") throw ParseError("--oracle supports only 'grid'");
                if (grid == 0) grid = 2000;
            }
            PointSet sites;
            if (random_n > 0) {
                sites = random_sites(random_n, seed);
            } else if (!input.empty()) {
                sites = load_pointset(input).points;
            } else {
                std::fputs("verify: need --input or --random\n", stderr);
                return kExitUsage;
            }
            VerifyOptions opts;
            opts.kmax = kmax;
            opts.seed = seed;
            opts.grid = grid;
            opts.bbox_scale = bbox_scale;
            opts.mode = mode;
            VerificationReport report = run_verification(sites, opts);
            std::fputs(report.render_text().c_str(), stdout);
            if (!out_path.empty()) write_file(out_path, report.render_json());
            if (!report.checks.empty() && report.checks.front().name == "general-position" &&
                report.checks.front().status == "fail")
                return kExitDegenerate;
            return report.pass() ? kExitPass : kExitCheckFailure;
        }

        if (cmd_interp->parsed()) {
            PointSetFile f = load_pointset(input);
            if (!f.has_values()) throw ParseError("interp: input file needs a value column");
            Vec2 q = parse_query(query_str);
            ScatterData data(f.points, f.values);
            std::vector<int> klist;
            if (!klist_str.empty()) {
                std::string cur;
                for (char c : klist_str + ",") {
                    if (c == ',') {
                        if (!cur.empty()) {
                            try {
                                klist.push_back(std::stoi(cur));
                            } catch (const std::exception&) {
                                throw ParseError("--klist expects comma-separated integers");
                            }
                        }
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                if (klist.empty()) throw ParseError("--klist expects comma-separated integers");
            } else {
                klist.push_back(k);
            }

            if (klist.size() == 1) {
                // single order: let errors propagate with their exit codes
                InterpolationResult r = interpolate(data, q, klist[0], bbox_scale);
                std::string out;
                if (emit_csv) {
                    out += "qx,qy,k,value\n";
                    out += format_double(q.x) + "," + format_double(q.y) + "," + std::to_string(r.k) + "," +
                           format_double(r.value) + "\n";
                } else {
                    out += interp_text(r, data);
                }
                emit(out_path, out);
                return kExitPass;
            }

            bool any_failed = false;
            std::string out;
            if (emit_csv) out += "qx,qy,k,value\n";
            for (const MultiResult& m : interpolate_multi(data, q, klist, bbox_scale)) {
                if (!m.result) {
                    any_failed = true;
                    std::fprintf(stderr, "k=%d: %s\n", m.k, m.error.c_str());
                    continue;
                }
                if (emit_csv) {
                    out += format_double(q.x) + "," + format_double(q.y) + "," + std::to_string(m.k) + "," +
                           format_double(m.result->value) + "\n";
                } else {
                    out += interp_text(*m.result, data);
                }
            }
            emit(out_path, out);
            return any_failed ? kExitCheckFailure : kExitPass;
        }

        if (cmd_interp1d->parsed()) {
            PointSetFile f = load_pointset(input);
            if (f.points.dim != 1) throw ParseError("interp1d: input must have dim=1");
            if (!f.has_values()) throw ParseError("interp1d: input file needs a value column");
            Samples1D s(f.points.xs(), f.values);
            // report each interpolant independently: g1 can succeed where
            // g2/g3 refuse (sample collision, short window)
            bool any_failed = false;
            std::string out;
            auto line = [&](const char* name, auto fn) {
                try {
                    out += std::string(name) + " " + format_double(fn(query_x, s)) + "\n";
                } catch (const Error& e) {
                    out += std::string(name) + " error: " + e.what() + "\n";
                    any_failed = true;
                }
            };
            line("g1", [](double x, const Samples1D& ss) { return g1(x, ss); });
            line("g2", [](double x, const Samples1D& ss) { return g2(x, ss); });
            line("g3", [](double x, const Samples1D& ss) { return g3(x, ss); });
            emit(out_path, out);
            if (!emit_curve.empty()) {
                // sweep the gap (x2, x3) that contains the query
                auto it = std::upper_bound(s.xs.begin(), s.xs.end(), query_x);
                int r = static_cast<int>(it - s.xs.begin());
                if (r < 3 || r > s.size() - 3) throw InsufficientSamples("emit-curve: need three samples each side");
                double x2 = s.xs[r - 1], x3 = s.xs[r];
                std::string csv = "x,g1,g2,g3\n";
                const int steps = 200;
                for (int i = 1; i < steps; ++i) {
                    double x = x2 + (x3 - x2) * i / steps;
                    csv += format_double(x) + "," + format_double(g1(x, s)) + "," + format_double(g2(x, s)) + "," +
                           format_double(g3(x, s)) + "\n";
                }
                write_file(emit_curve, csv);
            }
            return any_failed ? kExitCheckFailure : kExitPass;
        }

        std::fputs("no subcommand\n", stderr);
        return kExitUsage;
    } catch (const DegenerateInput& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const DegenerateInsertion& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailure;
    }
}
