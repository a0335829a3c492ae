#include "fuzzystar/fuzzy.hpp"

#include "fuzzystar/error.hpp"
#include "fuzzystar/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace fuzzystar {

namespace {

std::string show(double x)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

} // namespace

PExponent::PExponent(double p) : p_(p)
{
    if (!(p >= 1.0) || !std::isfinite(p)) {
        throw DomainError("exponent p must satisfy 1 <= p < infinity, got " + show(p));
    }
}

LevelFuzzySet LevelFuzzySet::make(std::vector<Level> levels)
{
    if (levels.empty()) {
        throw InvariantViolation("normality (i)", "no levels given");
    }
    const int dim = levels.front().set.dimension();
    for (const Level& l : levels) {
        if (!(l.alpha > 0.0 && l.alpha <= 1.0)) {
            throw InvariantViolation("alpha range", "alpha " + show(l.alpha) + " is outside (0, 1]");
        }
        if (l.set.dimension() != dim) {
            throw InvariantViolation("dimension", "levels mix dimensions 1 and 2");
        }
    }

    std::stable_sort(levels.begin(), levels.end(),
                     [](const Level& a, const Level& b) { return a.alpha < b.alpha; });
    std::vector<Level> merged;
    merged.reserve(levels.size());
    for (Level& l : levels) {
        if (!merged.empty() && merged.back().alpha == l.alpha) {
            if (!(merged.back().set == l.set)) {
                throw InvariantViolation("duplicate alpha", "two different sets given at alpha " + show(l.alpha));
            }
            continue;
        }
        merged.push_back(std::move(l));
    }

    if (merged.back().alpha != 1.0) {
        throw InvariantViolation("normality (i)", "no level at alpha = 1");
    }
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (!geometry::includes(merged[i].set, merged[i + 1].set)) {
            throw InvariantViolation("nesting", "level alpha=" + show(merged[i].alpha)
                                                    + " does not contain level alpha=" + show(merged[i + 1].alpha));
        }
    }
    return LevelFuzzySet(std::move(merged));
}

const geometry::CompactSet& LevelFuzzySet::alpha_cut(double alpha) const
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha " + show(alpha) + " is outside [0, 1]");
    }
    if (alpha == 0.0) {
        return levels_.front().set;
    }
    const auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha,
                                     [](const Level& l, double a) { return l.alpha < a; });
    return it->set;
}

double LevelFuzzySet::membership(const geometry::Point& x) const
{
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
        if (geometry::contains(it->set, x)) {
            return it->alpha;
        }
    }
    return 0.0;
}

LevelFuzzySet crisp(geometry::CompactSet set)
{
    return LevelFuzzySet::make({Level{1.0, std::move(set)}});
}

LevelFuzzySet translate(const LevelFuzzySet& u, const geometry::Point& offset)
{
    std::vector<Level> out;
    out.reserve(u.size());
    for (const Level& l : u.levels()) {
        out.push_back({l.alpha, geometry::translate(l.set, offset)});
    }
    return LevelFuzzySet::make(std::move(out));
}

LevelFuzzySet scale(const LevelFuzzySet& u, double factor)
{
    std::vector<Level> out;
    out.reserve(u.size());
    for (const Level& l : u.levels()) {
        out.push_back({l.alpha, geometry::scale(l.set, factor)});
    }
    return LevelFuzzySet::make(std::move(out));
}

std::string_view to_string(FuzzyClass c)
{
    switch (c) {
    case FuzzyClass::fuzzy_number:
        return "FuzzyNumber";
    case FuzzyClass::fuzzy_star_shaped:
        return "FuzzyStarShaped";
    case FuzzyClass::neither:
        break;
    }
    return "Neither";
}

ClassificationReport classify(const LevelFuzzySet& u, PExponent p)
{
    ClassificationReport r;
    // (i), (ii) and (v) hold for every value that passed construction.
    r.normal = true;
    r.upper_semicontinuous = true;
    r.compact_support = true;
    r.fuzzy_convex = std::all_of(u.levels().begin(), u.levels().end(),
                                 [](const Level& l) { return geometry::is_convex(l.set); });
    r.star_shaped_cuts = std::all_of(u.levels().begin(), u.levels().end(),
                                     [](const Level& l) { return geometry::is_star_shaped(l.set); });
    r.p_used = p.value();
    r.p_mean_norm = p_mean_norm(u, p);
    r.p_integrable = std::isfinite(r.p_mean_norm);

    const bool base = r.normal && r.upper_semicontinuous && r.compact_support;
    if (base && r.fuzzy_convex) {
        r.label = FuzzyClass::fuzzy_number;
    } else if (base && r.star_shaped_cuts) {
        r.label = FuzzyClass::fuzzy_star_shaped;
    } else {
        r.label = FuzzyClass::neither;
    }
    return r;
}

std::vector<geometry::Kernel> level_kernels(const LevelFuzzySet& u)
{
    if (u.dimension() != 2) {
        throw DimensionMismatch("level kernels are defined for polygon levels only");
    }
    std::vector<geometry::Kernel> out;
    out.reserve(u.size());
    for (const Level& l : u.levels()) {
        out.push_back(geometry::polygon_kernel(l.set.polygon()));
    }
    return out;
}

} // namespace fuzzystar
