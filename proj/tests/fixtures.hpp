#pragma once

#include "fuzzystar/fuzzy.hpp"
#include "oracles.hpp"

#include <vector>

namespace fixtures {

using fuzzystar::LevelFuzzySet;
using fuzzystar::geometry::CompactSet;
using fuzzystar::geometry::Interval;
using fuzzystar::geometry::Point2;
using fuzzystar::geometry::Polygon;

inline Polygon square(double x0, double y0, double side)
{
    return Polygon({{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}});
}

// ([0,2] x [0,1]) ∪ ([0,1] x [0,2]).
inline Polygon l_shape()
{
    return Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

// Three teeth separated by two notches open at the top.
inline Polygon comb()
{
    return Polygon({{0, 0}, {5, 0}, {5, 3}, {4, 3}, {4, 1}, {3, 1}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
}

inline oracle::Ring ring(const Polygon& p)
{
    oracle::Ring r;
    for (const Point2& v : p.vertices()) {
        r.push_back({v.x, v.y});
    }
    return r;
}

inline LevelFuzzySet interval_steps(const oracle::Steps& rows)
{
    std::vector<fuzzystar::Level> levels;
    for (const auto& r : rows) {
        levels.push_back({r.alpha, Interval(r.a, r.b)});
    }
    return fuzzystar::make_fuzzy(std::move(levels));
}

// {(0.5, [0,2]), (1, [0,1])}: a single jump of height 1 at alpha = 0.5.
inline LevelFuzzySet step_jump()
{
    return interval_steps({{0.5, 0.0, 2.0}, {1.0, 0.0, 1.0}});
}

// u_n = {(n^-p, [0,n]), (1, [0,1])}.
inline oracle::Steps spike_rows(int n, double p)
{
    return {{std::pow(static_cast<double>(n), -p), 0.0, static_cast<double>(n)}, {1.0, 0.0, 1.0}};
}

inline LevelFuzzySet spike(int n, double p)
{
    return interval_steps(spike_rows(n, p));
}

// Closed form of the spike modulus: the integrand is n - 1 on
// (n^-p, n^-p + h] ∩ [h, 1] and zero elsewhere.
inline double spike_modulus(int n, double h, double p)
{
    const double jump = std::pow(static_cast<double>(n), -p);
    const double window = std::min(jump + h, 1.0) - std::max(jump, h);
    return window <= 0.0 ? 0.0 : (n - 1) * std::pow(window, 1.0 / p);
}

inline LevelFuzzySet crisp_interval(double a, double b)
{
    return fuzzystar::crisp(Interval(a, b));
}

} // namespace fixtures
