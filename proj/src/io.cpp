#include "fuzzystar/io.hpp"

#include "fuzzystar/metric.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fuzzystar::io {

namespace {

using Json = nlohmann::json;
using Out = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

double number(const Json& v, const std::string& path)
{
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    return v.get<double>();
}

std::string join(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

geometry::CompactSet parse_set(const Json& v, const std::string& path)
{
    const Json& type = field(v, "type", path);
    if (!type.is_string()) {
        fail(join(path, "type"), "expected a string");
    }
    try {
        if (type == "interval") {
            return geometry::Interval(number(field(v, "a", path), join(path, "a")),
                                      number(field(v, "b", path), join(path, "b")));
        }
        if (type == "polygon") {
            const std::string vpath = join(path, "vertices");
            const Json& vs = field(v, "vertices", path);
            if (!vs.is_array()) {
                fail(vpath, "expected an array");
            }
            std::vector<geometry::Point2> points;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const std::string ipath = vpath + "[" + std::to_string(i) + "]";
                if (!vs[i].is_array() || vs[i].size() != 2) {
                    fail(ipath, "expected [x, y]");
                }
                points.push_back({number(vs[i][0], ipath + "[0]"), number(vs[i][1], ipath + "[1]")});
            }
            return geometry::Polygon(std::move(points));
        }
    } catch (const GeometryError& e) {
        fail(path, e.what());
    }
    fail(join(path, "type"), "expected \"interval\" or \"polygon\"");
}

Out set_json(const geometry::CompactSet& s)
{
    Out o;
    if (s.is_interval()) {
        o["type"] = "interval";
        o["a"] = s.interval().lower();
        o["b"] = s.interval().upper();
        return o;
    }
    o["type"] = "polygon";
    Out vs = Out::array();
    for (const geometry::Point2& p : s.polygon().vertices()) {
        vs.push_back(Out::array({p.x, p.y}));
    }
    o["vertices"] = std::move(vs);
    return o;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("<root>: invalid JSON: ") + e.what());
    }
}

std::string dump(const Out& o)
{
    return o.dump(2) + "\n";
}

} // namespace

LevelFuzzySet parse_fuzzy(std::string_view text)
{
    const Json doc = parse_json(text);
    const Json& dim_value = field(doc, "dim", "");
    if (!dim_value.is_number_integer() || (dim_value != 1 && dim_value != 2)) {
        fail("dim", "expected 1 or 2");
    }
    const int dim = dim_value.get<int>();
    const Json& levels = field(doc, "levels", "");
    if (!levels.is_array()) {
        fail("levels", "expected an array");
    }
    std::vector<Level> out;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const std::string path = "levels[" + std::to_string(i) + "]";
        const double alpha = number(field(levels[i], "alpha", path), path + ".alpha");
        geometry::CompactSet set = parse_set(field(levels[i], "set", path), path + ".set");
        if (set.dimension() != dim) {
            fail(path + ".set", "set of dimension " + std::to_string(set.dimension()) + " in a dim "
                                    + std::to_string(dim) + " document");
        }
        out.push_back({alpha, std::move(set)});
    }
    return LevelFuzzySet::make(std::move(out));
}

std::string emit_fuzzy(const LevelFuzzySet& u)
{
    Out doc;
    doc["dim"] = u.dimension();
    Out levels = Out::array();
    for (const Level& l : u.levels()) {
        Out level;
        level["alpha"] = l.alpha;
        level["set"] = set_json(l.set);
        levels.push_back(std::move(level));
    }
    doc["levels"] = std::move(levels);
    return dump(doc);
}

LevelFuzzySet load_fuzzy(const std::filesystem::path& path)
{
    const std::string text = read_file(path);
    try {
        return parse_fuzzy(text);
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string() + ": " + e.what());
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(e.condition(), path.filename().string() + ": "
                                                    + std::string(e.what()).substr(e.condition().size() + 2));
    }
}

std::vector<NamedMember> load_family(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw ParseError(dir.string() + ": not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    if (files.empty()) {
        throw ParseError(dir.string() + ": no *.json members");
    }
    std::vector<NamedMember> family;
    for (const auto& f : files) {
        family.push_back({f.filename().string(), load_fuzzy(f)});
    }
    return family;
}

DiagnoseConfig parse_config(std::string_view text)
{
    const Json doc = parse_json(text);
    DiagnoseConfig c;
    c.p = number(field(doc, "p", ""), "p");
    c.bound_threshold = number(field(doc, "bound_threshold", ""), "bound_threshold");
    c.eps = number(field(doc, "eps", ""), "eps");
    if (doc.contains("spacing")) {
        c.spacing = number(doc["spacing"], "spacing");
    }
    const Json& grid = field(doc, "h_grid", "");
    if (!grid.is_array()) {
        fail("h_grid", "expected an array");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        c.h_grid.push_back(number(grid[i], "h_grid[" + std::to_string(i) + "]"));
    }

    if (!(c.p >= 1.0) || !std::isfinite(c.p)) {
        fail("p", "expected a finite number >= 1");
    }
    if (!(c.bound_threshold > 0.0)) {
        fail("bound_threshold", "expected a positive number");
    }
    if (!(c.eps > 0.0)) {
        fail("eps", "expected a positive number");
    }
    if (!(c.spacing > 0.0)) {
        fail("spacing", "expected a positive number");
    }
    if (c.h_grid.empty()) {
        fail("h_grid", "expected at least one value");
    }
    for (std::size_t i = 0; i < c.h_grid.size(); ++i) {
        if (!(c.h_grid[i] > 0.0 && c.h_grid[i] < 1.0) || (i > 0 && !(c.h_grid[i] > c.h_grid[i - 1]))) {
            fail("h_grid[" + std::to_string(i) + "]", "values must be strictly increasing in (0, 1)");
        }
    }
    return c;
}

std::string display(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string distance_json(const geometry::Estimate& d)
{
    Out o;
    o["value"] = d.value;
    o["error_bound"] = d.error_bound;
    return dump(o);
}

std::string classification_json(const ClassificationReport& r)
{
    Out o;
    o["class"] = std::string(to_string(r.label));
    Out c;
    c["i_normal"] = r.normal;
    c["ii_upper_semicontinuous"] = r.upper_semicontinuous;
    c["iii_fuzzy_convex"] = r.fuzzy_convex;
    c["iv_star_shaped_cuts"] = r.star_shaped_cuts;
    c["v_compact_support"] = r.compact_support;
    c["vi_p_integrable"] = r.p_integrable;
    o["conditions"] = std::move(c);
    o["p"] = r.p_used;
    o["p_mean_norm"] = r.p_mean_norm;
    return dump(o);
}

std::string kernel_json(const geometry::CompactSet& cut)
{
    Out o;
    if (cut.is_interval()) {
        const auto& s = cut.interval();
        o["empty"] = false;
        o["degenerate"] = s.lower() == s.upper();
        o["interval"] = Out::array({s.lower(), s.upper()});
        return dump(o);
    }
    const geometry::Kernel k = geometry::polygon_kernel(cut.polygon());
    o["empty"] = k.empty();
    if (!k.empty()) {
        o["degenerate"] = k.kind == geometry::KernelKind::degenerate;
        Out vs = Out::array();
        for (const geometry::Point2& p : k.vertices) {
            vs.push_back(Out::array({p.x, p.y}));
        }
        o["vertices"] = std::move(vs);
    }
    return dump(o);
}

std::string report_json(const FamilyReport& r)
{
    Out o;
    o["verdict"] = std::string(to_string(r.verdict.kind));
    Out detail;
    if (r.verdict.kind == VerdictKind::bound_violated) {
        detail["threshold"] = r.verdict.threshold;
        detail["bound_M"] = r.verdict.value;
    } else if (r.verdict.kind == VerdictKind::equi_violated) {
        detail["h"] = r.verdict.h;
        detail["value"] = r.verdict.value;
    } else {
        detail = Out::object();
    }
    o["verdict_detail"] = std::move(detail);
    o["size"] = r.size;
    o["p"] = r.p;
    o["bound_M"] = r.bound_M;
    o["bound_threshold"] = r.bound_threshold;
    o["bound_ok"] = r.bound_ok;
    o["eps"] = r.eps;
    o["equi_ok"] = r.equi_ok;
    Out table = Out::array();
    for (const ModulusSample& s : r.equi_table) {
        Out row;
        row["h"] = s.h;
        row["sup_modulus"] = s.modulus;
        table.push_back(std::move(row));
    }
    o["equi_table"] = std::move(table);
    o["summary"] = std::string(to_string(r.verdict.kind)) + ": M = " + display(r.bound_M) + " (threshold "
                   + display(r.bound_threshold) + "), sup-modulus at h = " + display(r.equi_table.front().h) + " is "
                   + display(r.equi_table.front().modulus) + " (eps " + display(r.eps) + ")";
    o["note"] = r.note;
    return dump(o);
}

std::string net_json(const EpsNet& net, const std::vector<std::string>& names, double p)
{
    Out o;
    o["eps"] = net.eps;
    o["p"] = p;
    Out reps = Out::array();
    for (const std::size_t i : net.representatives) {
        reps.push_back(names.at(i));
    }
    o["representatives"] = std::move(reps);
    Out table = Out::array();
    for (std::size_t i = 0; i < net.assignment.size(); ++i) {
        Out row;
        row["member"] = names.at(i);
        row["representative"] = names.at(net.assignment[i].representative);
        row["distance"] = net.assignment[i].distance;
        table.push_back(std::move(row));
    }
    o["assignment"] = std::move(table);
    return dump(o);
}

} // namespace fuzzystar::io
