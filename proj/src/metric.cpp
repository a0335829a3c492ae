#include "fuzzystar/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzystar {

namespace {

void require_same_dimension(const LevelFuzzySet& u, const LevelFuzzySet& v)
{
    if (u.dimension() != v.dimension()) {
        throw DimensionMismatch("fuzzy sets of dimension " + std::to_string(u.dimension()) + " and "
                                + std::to_string(v.dimension()));
    }
}

void require_h(double h)
{
    if (!(h > 0.0 && h < 1.0)) {
        throw DomainError("shift h must lie in (0, 1)");
    }
}

double root(double sum, PExponent p)
{
    return p.value() == 1.0 ? sum : std::pow(sum, 1.0 / p.value());
}

double power(double x, PExponent p)
{
    return p.value() == 1.0 ? x : std::pow(x, p.value());
}

double quadrature_root(const std::function<double(double)>& f, double lo, double hi, PExponent p, double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    try {
        return root(integrate_adaptive(f, lo, hi, power(tol, p)).value, p);
    } catch (const QuadratureError& e) {
        throw QuadratureError(e.what(), root(std::max(0.0, e.best_estimate()), p));
    }
}

} // namespace

geometry::Estimate dp_distance(const LevelFuzzySet& u, const LevelFuzzySet& v, PExponent p, double spacing)
{
    require_same_dimension(u, v);
    std::vector<double> grid;
    grid.reserve(u.size() + v.size());
    for (const Level& l : u.levels()) {
        grid.push_back(l.alpha);
    }
    for (const Level& l : v.levels()) {
        grid.push_back(l.alpha);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // Both cut maps are constant on every (previous, beta].
    double sum = 0.0;
    double error_sum = 0.0;
    double previous = 0.0;
    for (const double beta : grid) {
        const double width = beta - previous;
        const auto h = geometry::hausdorff(u.alpha_cut(beta), v.alpha_cut(beta), spacing);
        sum += width * power(h.value, p);
        error_sum += width * power(h.error_bound, p);
        previous = beta;
    }
    return {root(sum, p), root(error_sum, p)};
}

double dp_distance_quadrature(const CutFunction& u, const CutFunction& v, PExponent p, double tol, double spacing)
{
    auto integrand = [&](double alpha) {
        return power(geometry::hausdorff(u(alpha), v(alpha), spacing).value, p);
    };
    return quadrature_root(integrand, 0.0, 1.0, p, tol);
}

double p_mean_norm(const LevelFuzzySet& u, PExponent p)
{
    double sum = 0.0;
    double previous = 0.0;
    for (const Level& l : u.levels()) {
        sum += (l.alpha - previous) * power(geometry::max_norm_on_set(l.set), p);
        previous = l.alpha;
    }
    return root(sum, p);
}

double p_mean_norm_quadrature(const CutFunction& u, PExponent p, double tol)
{
    auto integrand = [&](double alpha) { return power(geometry::max_norm_on_set(u(alpha)), p); };
    return quadrature_root(integrand, 0.0, 1.0, p, tol);
}

double left_continuity_modulus(const LevelFuzzySet& u, double h, PExponent p, double spacing)
{
    require_h(h);
    // The integrand changes only where alpha or alpha - h crosses a level.
    std::vector<double> grid{h, 1.0};
    for (const Level& l : u.levels()) {
        for (const double g : {l.alpha, l.alpha + h}) {
            if (g > h && g < 1.0) {
                grid.push_back(g);
            }
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double sum = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double mid = (grid[i - 1] + grid[i]) / 2.0;
        const geometry::CompactSet& upper = u.alpha_cut(mid);
        const geometry::CompactSet& lower = u.alpha_cut(mid - h);
        if (&upper == &lower) {
            continue;
        }
        sum += (grid[i] - grid[i - 1]) * power(geometry::hausdorff(upper, lower, spacing).value, p);
    }
    return root(sum, p);
}

double left_continuity_modulus_quadrature(const CutFunction& u, double h, PExponent p, double tol, double spacing)
{
    require_h(h);
    auto integrand = [&](double alpha) {
        return power(geometry::hausdorff(u(alpha), u(std::max(0.0, alpha - h)), spacing).value, p);
    };
    return quadrature_root(integrand, h, 1.0, p, tol);
}

void require_h_grid(std::span<const double> h_grid)
{
    if (h_grid.empty()) {
        throw DomainError("h grid is empty");
    }
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (!(h_grid[i] > 0.0 && h_grid[i] < 1.0)) {
            throw DomainError("h grid values must lie in (0, 1)");
        }
        if (i > 0 && !(h_grid[i] > h_grid[i - 1])) {
            throw DomainError("h grid must be strictly increasing");
        }
    }
}

ModulusCurve::ModulusCurve(std::vector<ModulusSample> samples, PExponent p) : samples_(std::move(samples)), p_(p)
{
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!(samples_[i].h > 0.0 && samples_[i].h < 1.0) || (i > 0 && !(samples_[i].h > samples_[i - 1].h))) {
            throw DomainError("modulus samples need strictly increasing h in (0, 1)");
        }
        if (!(samples_[i].modulus >= 0.0)) {
            throw DomainError("modulus values must be non-negative");
        }
    }
}

ModulusCurve modulus_curve(const LevelFuzzySet& u, std::span<const double> h_grid, PExponent p, double spacing)
{
    require_h_grid(h_grid);
    std::vector<ModulusSample> samples;
    samples.reserve(h_grid.size());
    for (const double h : h_grid) {
        samples.push_back({h, left_continuity_modulus(u, h, p, spacing)});
    }
    return ModulusCurve(std::move(samples), p);
}

std::optional<double> find_delta(const LevelFuzzySet& u, double eps, PExponent p, std::span<const double> h_grid,
                                 double spacing)
{
    require_h_grid(h_grid);
    if (!(eps > 0.0)) {
        throw DomainError("eps must be positive");
    }
    std::optional<double> delta;
    for (const double h : h_grid) {
        if (!(left_continuity_modulus(u, h, p, spacing) < eps)) {
            break;
        }
        delta = h;
    }
    return delta;
}

CutFunction step_cuts(LevelFuzzySet u)
{
    return [u = std::move(u)](double alpha) { return u.alpha_cut(alpha); };
}

CutFunction linear_interval_cuts(LevelFuzzySet u)
{
    if (u.dimension() != 1) {
        throw DimensionMismatch("linear interpolation is defined for interval levels only");
    }
    return [u = std::move(u)](double alpha) -> geometry::CompactSet {
        const auto levels = u.levels();
        if (alpha <= levels.front().alpha) {
            return levels.front().set;
        }
        if (alpha >= levels.back().alpha) {
            return levels.back().set;
        }
        const auto it = std::lower_bound(levels.begin(), levels.end(), alpha,
                                         [](const Level& l, double a) { return l.alpha < a; });
        const Level& hi = *it;
        const Level& lo = *(it - 1);
        const double t = (alpha - lo.alpha) / (hi.alpha - lo.alpha);
        const auto& a = lo.set.interval();
        const auto& b = hi.set.interval();
        const double lower = a.lower() + t * (b.lower() - a.lower());
        const double upper = a.upper() + t * (b.upper() - a.upper());
        return geometry::Interval(lower, std::max(lower, upper));
    };
}

CutFunction triangular(double a, double b, double c)
{
    if (!std::isfinite(a) || !std::isfinite(c) || !(a <= b && b <= c)) {
        throw DomainError("triangular fuzzy number needs finite a <= b <= c");
    }
    return [a, b, c](double alpha) -> geometry::CompactSet {
        const double t = std::clamp(alpha, 0.0, 1.0);
        const double lower = a + (b - a) * t;
        const double upper = c - (c - b) * t;
        return geometry::Interval(lower, std::max(lower, upper));
    };
}

} // namespace fuzzystar
