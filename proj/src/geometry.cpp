#include "fuzzystar/geometry.hpp"

#include "fuzzystar/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fuzzystar::geometry {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Signed distance of c from the directed line a->b; positive on the left.
double side(const Point2& a, const Point2& b, const Point2& c)
{
    const double len = distance(a, b);
    return cross(a, b, c) / len;
}

int side_sign(const Point2& a, const Point2& b, const Point2& c)
{
    const double s = side(a, b, c);
    if (s > kTolerance) {
        return 1;
    }
    if (s < -kTolerance) {
        return -1;
    }
    return 0;
}

// Segments share at least one point (touching counts).
bool segments_touch(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2)
{
    const int d1 = side_sign(q1, q2, p1);
    const int d2 = side_sign(q1, q2, p2);
    const int d3 = side_sign(p1, p2, q1);
    const int d4 = side_sign(p1, p2, q2);
    if (d1 * d2 < 0 && d3 * d4 < 0) {
        return true;
    }
    return segment_distance(p1, q1, q2) <= kTolerance || segment_distance(p2, q1, q2) <= kTolerance
        || segment_distance(q1, p1, p2) <= kTolerance || segment_distance(q2, p1, p2) <= kTolerance;
}

// Interiors cross transversally.
bool segments_cross(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2)
{
    return side_sign(q1, q2, p1) * side_sign(q1, q2, p2) < 0
        && side_sign(p1, p2, q1) * side_sign(p1, p2, q2) < 0;
}

double boundary_distance(const Polygon& polygon, const Point2& x)
{
    const auto v = polygon.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        best = std::min(best, segment_distance(x, v[j], v[i]));
    }
    return best;
}

bool crossing_inside(const Polygon& polygon, const Point2& x)
{
    const auto v = polygon.vertices();
    bool inside = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > x.y) != (v[j].y > x.y)) {
            const double xi = v[j].x + (x.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
            if (x.x < xi) {
                inside = !inside;
            }
        }
    }
    return inside;
}

double polygon_distance(const Polygon& polygon, const Point2& x)
{
    if (crossing_inside(polygon, x)) {
        return 0.0;
    }
    const double d = boundary_distance(polygon, x);
    return d <= kTolerance ? 0.0 : d;
}

double interval_distance(const Interval& s, double x)
{
    if (x < s.lower()) {
        return s.lower() - x;
    }
    if (x > s.upper()) {
        return x - s.upper();
    }
    return 0.0;
}

void require_same_dimension(const CompactSet& a, const CompactSet& b)
{
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("sets of dimension " + std::to_string(a.dimension()) + " and "
                                + std::to_string(b.dimension()));
    }
}

void require_spacing(double spacing)
{
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw DomainError("sampling spacing must be positive and finite");
    }
}

std::size_t pieces(double length, double pitch)
{
    const double n = std::ceil(length / pitch);
    if (n > 1e8) {
        throw DomainError("sampling spacing too small for the set size");
    }
    return std::max<std::size_t>(1, static_cast<std::size_t>(n));
}

// Boundary samples of `polygon` at pitch <= `pitch`, vertices included.
std::vector<Point2> boundary_samples(const Polygon& polygon, double pitch)
{
    std::vector<Point2> out;
    const auto v = polygon.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        const std::size_t k = pieces(distance(a, b), pitch);
        for (std::size_t j = 0; j < k; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(k);
            out.push_back({a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t});
        }
    }
    return out;
}

Estimate directed_polygon(const Polygon& a, const Polygon& b, double spacing)
{
    double best = 0.0;
    if (is_convex(CompactSet(b))) {
        // d(., B) is convex, so its maximum over A sits on A's boundary.
        for (const Point2& x : boundary_samples(a, spacing)) {
            best = std::max(best, polygon_distance(b, x));
        }
        return {best, spacing};
    }

    // For nonconvex B the maximum can lie inside A. A grid of pitch g inside A
    // together with boundary samples at pitch g puts every point of A within
    // g * (sqrt(2) + 1/2) of some sample.
    const double pitch = spacing / (std::sqrt(2.0) + 0.5);
    for (const Point2& x : boundary_samples(a, pitch)) {
        best = std::max(best, polygon_distance(b, x));
    }
    double min_x = a[0].x, max_x = a[0].x, min_y = a[0].y, max_y = a[0].y;
    for (const Point2& p : a.vertices()) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const std::size_t nx = pieces(max_x - min_x, pitch);
    const std::size_t ny = pieces(max_y - min_y, pitch);
    if (static_cast<double>(nx) * static_cast<double>(ny) > 1e8) {
        throw DomainError("sampling spacing too small for the set size");
    }
    for (std::size_t i = 0; i <= nx; ++i) {
        for (std::size_t j = 0; j <= ny; ++j) {
            const Point2 x{min_x + pitch * static_cast<double>(i), min_y + pitch * static_cast<double>(j)};
            if (crossing_inside(a, x)) {
                best = std::max(best, polygon_distance(b, x));
            }
        }
    }
    return {best, spacing};
}

} // namespace

Interval::Interval(double a, double b) : a_(a), b_(b)
{
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw GeometryError("interval endpoints must be finite");
    }
    if (a > b) {
        throw GeometryError("interval lower endpoint exceeds upper endpoint");
    }
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices))
{
    const std::size_t n = vertices_.size();
    if (n < 3) {
        throw GeometryError("polygon needs at least 3 vertices");
    }
    for (const Point2& p : vertices_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw GeometryError("polygon vertices must be finite");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (vertices_[i] == vertices_[(i + 1) % n]) {
            throw GeometryError("polygon has repeated consecutive vertex " + std::to_string(i));
        }
    }
    const double area2 = signed_area(vertices_);
    if (std::abs(area2) <= kTolerance) {
        throw GeometryError("polygon has zero area");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vertices_[i];
        const Point2& b = vertices_[(i + 1) % n];
        // Adjacent edges may only share their common vertex.
        const Point2& c = vertices_[(i + 2) % n];
        if (segment_distance(c, a, b) <= kTolerance || segment_distance(a, b, c) <= kTolerance) {
            throw GeometryError("polygon edges " + std::to_string(i) + " and " + std::to_string((i + 1) % n)
                                + " overlap");
        }
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) {
                continue;
            }
            if (segments_touch(a, b, vertices_[j], vertices_[(j + 1) % n])) {
                throw GeometryError("polygon is not simple: edges " + std::to_string(i) + " and "
                                    + std::to_string(j) + " intersect");
            }
        }
    }
    if (area2 < 0.0) {
        std::reverse(vertices_.begin(), vertices_.end());
    }
}

double Polygon::area() const
{
    return std::abs(signed_area(vertices_)) / 2.0;
}

const Interval& CompactSet::interval() const
{
    if (const auto* s = std::get_if<Interval>(&set_)) {
        return *s;
    }
    throw DimensionMismatch("expected an interval, got a polygon");
}

const Polygon& CompactSet::polygon() const
{
    if (const auto* s = std::get_if<Polygon>(&set_)) {
        return *s;
    }
    throw DimensionMismatch("expected a polygon, got an interval");
}

// Twice the signed area (shoelace).
double signed_area(std::span<const Point2> ring)
{
    double sum = 0.0;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
        sum += ring[j].x * ring[i].y - ring[i].x * ring[j].y;
    }
    return sum;
}

double distance(const Point2& a, const Point2& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double segment_distance(const Point2& x, const Point2& a, const Point2& b)
{
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) {
        return distance(x, a);
    }
    const double t = std::clamp(((x.x - a.x) * dx + (x.y - a.y) * dy) / len2, 0.0, 1.0);
    return distance(x, {a.x + t * dx, a.y + t * dy});
}

bool contains(const Polygon& polygon, const Point2& x)
{
    return crossing_inside(polygon, x) || boundary_distance(polygon, x) <= kTolerance;
}

bool contains(const CompactSet& set, const Point& x)
{
    return point_to_set_distance(x, set) == 0.0;
}

bool includes(const CompactSet& outer, const CompactSet& inner)
{
    require_same_dimension(outer, inner);
    if (outer.is_interval()) {
        const Interval& o = outer.interval();
        const Interval& i = inner.interval();
        return o.lower() <= i.lower() && i.upper() <= o.upper();
    }
    const Polygon& o = outer.polygon();
    const auto iv = inner.polygon().vertices();
    const auto ov = o.vertices();
    for (std::size_t k = 0; k < iv.size(); ++k) {
        const Point2& a = iv[k];
        const Point2& b = iv[(k + 1) % iv.size()];
        if (!contains(o, a) || !contains(o, {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0})) {
            return false;
        }
        for (std::size_t m = 0; m < ov.size(); ++m) {
            if (segments_cross(a, b, ov[m], ov[(m + 1) % ov.size()])) {
                return false;
            }
        }
    }
    return true;
}

double point_to_set_distance(const Point& x, const CompactSet& set)
{
    if (dimension_of(x) != set.dimension()) {
        throw DimensionMismatch("point of dimension " + std::to_string(dimension_of(x)) + " against set of dimension "
                                + std::to_string(set.dimension()));
    }
    if (set.is_interval()) {
        return interval_distance(set.interval(), std::get<double>(x));
    }
    return polygon_distance(set.polygon(), std::get<Point2>(x));
}

Estimate directed_hausdorff(const CompactSet& a, const CompactSet& b, double spacing)
{
    require_same_dimension(a, b);
    if (a.is_interval()) {
        const Interval& s = a.interval();
        const Interval& t = b.interval();
        return {std::max(interval_distance(t, s.lower()), interval_distance(t, s.upper())), 0.0};
    }
    require_spacing(spacing);
    return directed_polygon(a.polygon(), b.polygon(), spacing);
}

Estimate hausdorff(const CompactSet& a, const CompactSet& b, double spacing)
{
    require_same_dimension(a, b);
    if (a.is_interval()) {
        const Interval& s = a.interval();
        const Interval& t = b.interval();
        return {std::max(std::abs(s.lower() - t.lower()), std::abs(s.upper() - t.upper())), 0.0};
    }
    if (a == b) {
        return {0.0, 0.0};
    }
    const Estimate ab = directed_hausdorff(a, b, spacing);
    const Estimate ba = directed_hausdorff(b, a, spacing);
    return {std::max(ab.value, ba.value), std::max(ab.error_bound, ba.error_bound)};
}

double max_norm_on_set(const CompactSet& set)
{
    if (set.is_interval()) {
        return std::max(std::abs(set.interval().lower()), std::abs(set.interval().upper()));
    }
    double best = 0.0;
    for (const Point2& p : set.polygon().vertices()) {
        best = std::max(best, std::hypot(p.x, p.y));
    }
    return best;
}

bool is_convex(const CompactSet& set)
{
    if (set.is_interval()) {
        return true;
    }
    const auto v = set.polygon().vertices();
    const std::size_t n = v.size();
    int strict = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& prev = v[(i + n - 1) % n];
        const Point2& cur = v[i];
        const Point2& next = v[(i + 1) % n];
        const double turn = cross(prev, cur, next) / (distance(prev, cur) * distance(cur, next));
        if (turn < -kTolerance) {
            return false;
        }
        if (turn > kTolerance) {
            ++strict;
        }
    }
    return strict >= 3;
}

bool is_star_shaped(const CompactSet& set)
{
    if (set.is_interval()) {
        return true;
    }
    return !polygon_kernel(set.polygon()).empty();
}

CompactSet translate(const CompactSet& set, const Point& offset)
{
    if (dimension_of(offset) != set.dimension()) {
        throw DimensionMismatch("translation vector dimension does not match the set");
    }
    if (set.is_interval()) {
        const double t = std::get<double>(offset);
        return Interval(set.interval().lower() + t, set.interval().upper() + t);
    }
    const Point2 t = std::get<Point2>(offset);
    std::vector<Point2> v(set.polygon().vertices().begin(), set.polygon().vertices().end());
    for (Point2& p : v) {
        p.x += t.x;
        p.y += t.y;
    }
    return Polygon(std::move(v));
}

CompactSet scale(const CompactSet& set, double factor)
{
    if (!(factor > 0.0) || !std::isfinite(factor)) {
        throw DomainError("scale factor must be positive");
    }
    if (set.is_interval()) {
        return Interval(set.interval().lower() * factor, set.interval().upper() * factor);
    }
    std::vector<Point2> v(set.polygon().vertices().begin(), set.polygon().vertices().end());
    for (Point2& p : v) {
        p.x *= factor;
        p.y *= factor;
    }
    return Polygon(std::move(v));
}

} // namespace fuzzystar::geometry
