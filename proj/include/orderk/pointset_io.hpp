#pragma once

#include <string>
#include <vector>

#include "orderk/point_set.hpp"
#include "orderk/voronoi.hpp"

namespace orderk {

// On-disk point set: header (dim, column names, optional labels), one row
// per point, optional value column. CSV with '#' header comments, or JSON
// with the same schema.
struct PointSetFile {
    PointSet points;
    std::vector<double> values;  // empty when the file has no value column

    bool has_values() const { return !values.empty(); }
};

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

PointSetFile parse_pointset_csv(const std::string& text);
PointSetFile parse_pointset_json(const std::string& text);
std::string to_csv(const PointSetFile& f);
std::string to_json_string(const PointSetFile& f);

// Dispatches on extension: .json -> JSON, anything else -> CSV.
PointSetFile load_pointset(const std::string& path);
void save_pointset(const PointSetFile& f, const std::string& path);

// Diagram dump: cells with owner sets, vertex lists, areas, bounded flags.
std::string diagram_to_json(const OrderKDiagram& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace orderk
