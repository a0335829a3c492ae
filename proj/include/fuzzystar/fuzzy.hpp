#pragma once

#include "fuzzystar/geometry.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace fuzzystar {

// Exponent of the L_p-type metric, 1 <= p < infinity.
class PExponent {
public:
    explicit PExponent(double p);

    double value() const noexcept { return p_; }

private:
    double p_;
};

struct Level {
    double alpha = 1.0;
    geometry::CompactSet set;

    friend bool operator==(const Level&, const Level&) = default;
};

// A fuzzy set on R^1 or R^2 given by finitely many nested alpha-cuts.
//
// Levels are stored with strictly increasing alpha, the last one at alpha = 1,
// each set containing the next. Between stored levels the cut map is a step
// function: [u]_alpha is the set of the smallest stored level >= alpha. This
// makes alpha -> [u]_alpha left-continuous, i.e. the membership function is
// upper semicontinuous. The alpha = 0 cut (the support) is the lowest level.
class LevelFuzzySet {
public:
    // Sorts by alpha and merges repeated identical levels. Throws
    // InvariantViolation on a missing alpha = 1 level, non-nested sets, mixed
    // dimensions or alpha outside (0, 1].
    static LevelFuzzySet make(std::vector<Level> levels);

    int dimension() const noexcept { return levels_.front().set.dimension(); }
    std::span<const Level> levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }

    const geometry::CompactSet& alpha_cut(double alpha) const;

    // max{alpha_i : x in set_i}, or 0.
    double membership(const geometry::Point& x) const;

    friend bool operator==(const LevelFuzzySet&, const LevelFuzzySet&) = default;

private:
    explicit LevelFuzzySet(std::vector<Level> levels) : levels_(std::move(levels)) {}

    std::vector<Level> levels_;
};

inline LevelFuzzySet make_fuzzy(std::vector<Level> levels)
{
    return LevelFuzzySet::make(std::move(levels));
}

LevelFuzzySet crisp(geometry::CompactSet set);
LevelFuzzySet translate(const LevelFuzzySet& u, const geometry::Point& offset);
LevelFuzzySet scale(const LevelFuzzySet& u, double factor);

enum class FuzzyClass { fuzzy_number, fuzzy_star_shaped, neither };

std::string_view to_string(FuzzyClass c);

struct ClassificationReport {
    bool normal = false;                // (i)
    bool upper_semicontinuous = false;  // (ii)
    bool fuzzy_convex = false;          // (iii)
    bool star_shaped_cuts = false;      // (iv)
    bool compact_support = false;       // (v)
    bool p_integrable = false;          // (vi)
    double p_used = 1.0;
    double p_mean_norm = 0.0;           // the (vi) integral, to the power 1/p
    FuzzyClass label = FuzzyClass::neither;
};

ClassificationReport classify(const LevelFuzzySet& u, PExponent p);

// Kernel of every stored polygon level, lowest alpha first. Callers wanting a
// common kernel point can intersect these. Throws DimensionMismatch for m = 1.
std::vector<geometry::Kernel> level_kernels(const LevelFuzzySet& u);

} // namespace fuzzystar
