#include "fuzzystar/error.hpp"
#include "fuzzystar/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzystar::geometry {

namespace {

// Keeps the part of the convex region `region` on the left of the directed
// line a->b shifted `slack` to the right.
std::vector<Point2> clip_left(const std::vector<Point2>& region, const Point2& a, const Point2& b, double slack)
{
    std::vector<Point2> out;
    if (region.empty()) {
        return out;
    }
    const double len = distance(a, b);
    auto offset = [&](const Point2& q) {
        return ((b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x)) / len + slack;
    };
    const std::size_t n = region.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& cur = region[i];
        const Point2& next = region[(i + 1) % n];
        const double sc = offset(cur);
        const double sn = offset(next);
        if (sc >= 0.0) {
            out.push_back(cur);
        }
        if ((sc >= 0.0) != (sn >= 0.0)) {
            const double t = sc / (sc - sn);
            out.push_back({cur.x + (next.x - cur.x) * t, cur.y + (next.y - cur.y) * t});
        }
    }
    return out;
}

std::vector<Point2> cleanup(const std::vector<Point2>& ring)
{
    std::vector<Point2> out;
    for (const Point2& p : ring) {
        if (out.empty() || distance(out.back(), p) > kTolerance) {
            out.push_back(p);
        }
    }
    while (out.size() > 1 && distance(out.front(), out.back()) <= kTolerance) {
        out.pop_back();
    }
    // Drop vertices lying on the segment joining their neighbours.
    bool changed = true;
    while (changed && out.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Point2& prev = out[(i + out.size() - 1) % out.size()];
            const Point2& next = out[(i + 1) % out.size()];
            if (segment_distance(out[i], prev, next) <= kTolerance) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

std::vector<Point2> clip_all(const Polygon& polygon, double slack)
{
    const auto v = polygon.vertices();
    double min_x = v[0].x, max_x = v[0].x, min_y = v[0].y, max_y = v[0].y;
    for (const Point2& p : v) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    std::vector<Point2> region{{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};
    for (std::size_t i = 0; i < v.size() && !region.empty(); ++i) {
        region = clip_left(region, v[i], v[(i + 1) % v.size()], slack);
    }
    return cleanup(region);
}

} // namespace

Polygon Kernel::polygon() const
{
    if (kind != KernelKind::full) {
        throw GeometryError("kernel is not full-dimensional");
    }
    return Polygon(vertices);
}

Kernel polygon_kernel(const Polygon& polygon)
{
    // Exact half-planes give the vertices of a full-dimensional kernel. Only
    // when that leaves no area do the half-planes widened by kTolerance decide
    // between a degenerate and an empty kernel.
    Kernel kernel;
    kernel.vertices = clip_all(polygon, 0.0);
    if (kernel.vertices.size() >= 3 && std::abs(signed_area(kernel.vertices)) / 2.0 > kTolerance) {
        kernel.kind = KernelKind::full;
        return kernel;
    }
    kernel.vertices = clip_all(polygon, kTolerance);
    kernel.kind = kernel.vertices.empty() ? KernelKind::empty : KernelKind::degenerate;
    return kernel;
}

} // namespace fuzzystar::geometry
