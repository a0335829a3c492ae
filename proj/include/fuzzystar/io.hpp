#pragma once

#include "fuzzystar/error.hpp"
#include "fuzzystar/family.hpp"
#include "fuzzystar/fuzzy.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzystar::io {

// Malformed document. The message starts with the JSON path of the offending
// value, e.g. "levels[2].set.vertices[1]: expected [x, y]".
class ParseError : public Error {
public:
    using Error::Error;
};

// {"dim": 1|2, "levels": [{"alpha": a, "set": {"type": "interval", "a": .., "b": ..}
//                                          | {"type": "polygon", "vertices": [[x, y], ...]}}]}
//
// Throws ParseError for schema problems and InvariantViolation when the levels
// do not form a valid fuzzy set.
LevelFuzzySet parse_fuzzy(std::string_view text);
std::string emit_fuzzy(const LevelFuzzySet& u);

LevelFuzzySet load_fuzzy(const std::filesystem::path& path);

struct NamedMember {
    std::string name;
    LevelFuzzySet value;
};

// Every *.json file directly inside `dir`, ordered by file name.
std::vector<NamedMember> load_family(const std::filesystem::path& dir);

struct DiagnoseConfig {
    double p = 1.0;
    std::vector<double> h_grid;
    double bound_threshold = 0.0;
    double eps = 0.0;
    double spacing = 1e-3;
};

DiagnoseConfig parse_config(std::string_view text);

// Fixed "%.12g" rendering used for human-readable summary fields.
std::string display(double x);

std::string distance_json(const geometry::Estimate& d);
std::string classification_json(const ClassificationReport& r);
std::string kernel_json(const geometry::CompactSet& cut);
std::string report_json(const FamilyReport& r);
std::string net_json(const EpsNet& net, const std::vector<std::string>& names, double p);

} // namespace fuzzystar::io
