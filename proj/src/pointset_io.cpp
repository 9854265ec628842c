#include "orderk/pointset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orderk {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& tok) {
    const std::string t = trim(tok);
    double v;
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw ParseError("invalid number: '" + tok + "'");
    return v;
}

}  // namespace

PointSetFile parse_pointset_csv(const std::string& text) {
    int dim = 0;
    std::vector<std::string> columns;
    std::vector<Vec2> pts;
    std::vector<std::string> labels;
    std::vector<double> values;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = trim(line.substr(1));
            if (body.rfind("dim=", 0) == 0) dim = std::stoi(body.substr(4));
            if (body.rfind("columns:", 0) == 0) {
                for (const std::string& c : split(body.substr(8), ',')) columns.push_back(trim(c));
            }
            continue;
        }
        if (dim == 0) throw ParseError("missing '# dim=' header before data rows");
        if (columns.empty()) {
            columns = dim == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x"};
        }
        std::vector<std::string> toks = split(line, ',');
        if (toks.size() != columns.size())
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(columns.size()) +
                             " fields, got " + std::to_string(toks.size()));
        Vec2 p{0, 0};
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const std::string& c = columns[i];
            if (c == "x")
                p.x = parse_double(toks[i]);
            else if (c == "y")
                p.y = parse_double(toks[i]);
            else if (c == "value")
                values.push_back(parse_double(toks[i]));
            else if (c == "label")
                labels.push_back(trim(toks[i]));
            else
                throw ParseError("unknown column '" + c + "'");
        }
        pts.push_back(p);
    }
    if (dim == 0) throw ParseError("empty point set file");
    if (!values.empty() && values.size() != pts.size()) throw ParseError("value column is incomplete");

    PointSetFile f;
    f.points = PointSet(dim, std::move(pts), std::move(labels));
    f.values = std::move(values);
    return f;
}

PointSetFile parse_pointset_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("points")) throw ParseError("JSON point set needs 'dim' and 'points'");
    int dim = j.at("dim").get<int>();
    std::vector<Vec2> pts;
    for (const auto& row : j.at("points")) {
        if (dim == 2) {
            if (row.size() != 2) throw ParseError("dim=2 point rows need two coordinates");
            pts.push_back({row[0].get<double>(), row[1].get<double>()});
        } else {
            double x = row.is_array() ? row[0].get<double>() : row.get<double>();
            pts.push_back({x, 0.0});
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    PointSetFile f;
    f.points = PointSet(dim, std::move(pts), std::move(labels));
    if (j.contains("values")) f.values = j.at("values").get<std::vector<double>>();
    if (!f.values.empty() && f.values.size() != f.points.pts.size()) throw ParseError("values length mismatch");
    return f;
}

std::string to_csv(const PointSetFile& f) {
    std::string out = "# dim=" + std::to_string(f.points.dim) + "\n";
    out += "# columns: ";
    bool with_labels = !f.points.labels.empty();
    if (with_labels) out += "label,";
    out += f.points.dim == 2 ? "x,y" : "x";
    if (f.has_values()) out += ",value";
    out += "\n";
    for (int i = 0; i < f.points.size(); ++i) {
        std::string row;
        if (with_labels) row += f.points.labels[i] + ",";
        row += format_double(f.points.pts[i].x);
        if (f.points.dim == 2) row += "," + format_double(f.points.pts[i].y);
        if (f.has_values()) row += "," + format_double(f.values[i]);
        out += row + "\n";
    }
    return out;
}

std::string to_json_string(const PointSetFile& f) {
    json j;
    j["dim"] = f.points.dim;
    json pts = json::array();
    for (const Vec2& p : f.points.pts) {
        if (f.points.dim == 2)
            pts.push_back(json::array({p.x, p.y}));
        else
            pts.push_back(json::array({p.x}));
    }
    j["points"] = std::move(pts);
    if (!f.points.labels.empty()) j["labels"] = f.points.labels;
    if (f.has_values()) j["values"] = f.values;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

PointSetFile load_pointset(const std::string& path) {
    std::string text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return parse_pointset_json(text);
    return parse_pointset_csv(text);
}

void save_pointset(const PointSetFile& f, const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        write_file(path, to_json_string(f));
    else
        write_file(path, to_csv(f));
}

std::string diagram_to_json(const OrderKDiagram& d) {
    json j;
    j["k"] = d.k;
    j["n"] = d.n;
    j["bbox"] = {{"xmin", d.bbox.xmin}, {"ymin", d.bbox.ymin}, {"xmax", d.bbox.xmax}, {"ymax", d.bbox.ymax}};
    json cells = json::array();
    for (const OrderKCell& c : d.cells) {
        json jc;
        jc["owners"] = c.owners;
        jc["bounded"] = c.bounded;
        jc["area"] = area(c.poly);
        json verts = json::array();
        for (const Vec2& v : c.poly.v) verts.push_back(json::array({v.x, v.y}));
        jc["vertices"] = std::move(verts);
        cells.push_back(std::move(jc));
    }
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

}  // namespace orderk
