#pragma once

#include <string>

#include "orderk/voronoi.hpp"

namespace orderk {

struct SvgOptions {
    int width = 800;          // pixel width; height follows the bbox aspect
    bool label_cells = true;  // owner-set labels at cell centroids
    bool label_sites = true;
};

// Deterministic figure of the diagram: cells filled by a palette hashed
// from the owner set, sites drawn with index labels. Viewport maps the
// construction bbox; pass a smaller --bbox-scale for close-ups.
std::string render_svg(const OrderKDiagram& d, const PointSet& s, const SvgOptions& opts = {});

}  // namespace orderk
