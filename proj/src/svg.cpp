#include "orderk/svg.hpp"

#include <cstdio>

namespace orderk {

namespace {

std::uint64_t owners_hash(const std::vector<int>& owners) {
    std::uint64_t h = 1469598103934665603ull;
    for (int o : owners) {
        h ^= static_cast<std::uint64_t>(o) + 0x9E3779B97F4A7C15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::string owners_label(const std::vector<int>& owners) {
    std::string s;
    for (std::size_t i = 0; i < owners.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(owners[i]);
    }
    return s;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const OrderKDiagram& d, const PointSet& s, const SvgOptions& opts) {
    const BBox& b = d.bbox;
    double sx = opts.width / (b.xmax - b.xmin);
    int height = opts.width;  // bbox is square
    auto X = [&](double x) { return (x - b.xmin) * sx; };
    auto Y = [&](double y) { return (b.ymax - y) * sx; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opts.width) + "\" height=\"" +
           std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(opts.width) + " " + std::to_string(height) +
           "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const OrderKCell& c : d.cells) {
        std::uint64_t h = owners_hash(c.owners);
        int hue = static_cast<int>(h % 360);
        std::string fill = "hsl(" + std::to_string(hue) + ",55%,82%)";
        std::string pts;
        for (const Vec2& v : c.poly.v) {
            if (!pts.empty()) pts += " ";
            pts += fmt(X(v.x)) + "," + fmt(Y(v.y));
        }
        out += "<polygon points=\"" + pts + "\" fill=\"" + fill + "\" stroke=\"#333\" stroke-width=\"0.6\"/>\n";
    }
    if (opts.label_cells) {
        for (const OrderKCell& c : d.cells) {
            Vec2 ctr = centroid(c.poly);
            out += "<text x=\"" + fmt(X(ctr.x)) + "\" y=\"" + fmt(Y(ctr.y)) +
                   "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#222\">{" + owners_label(c.owners) +
                   "}</text>\n";
        }
    }
    for (int i = 0; i < s.size(); ++i) {
        out += "<circle cx=\"" + fmt(X(s.pts[i].x)) + "\" cy=\"" + fmt(Y(s.pts[i].y)) +
               "\" r=\"2.5\" fill=\"black\"/>\n";
        if (opts.label_sites) {
            std::string name = s.labels.empty() ? "Q" + std::to_string(i) : s.labels[i];
            out += "<text x=\"" + fmt(X(s.pts[i].x) + 4) + "\" y=\"" + fmt(Y(s.pts[i].y) - 4) +
                   "\" font-size=\"10\" fill=\"black\">" + name + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace orderk
