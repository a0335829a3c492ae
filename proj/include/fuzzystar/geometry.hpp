#pragma once

#include <span>
#include <variant>
#include <vector>

namespace fuzzystar::geometry {

// Absolute tolerance for collinearity, containment and clipping predicates.
// Coordinates are expected to be O(1) to O(1e3).
inline constexpr double kTolerance = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

// A point of R^1 (double) or R^2 (Point2).
using Point = std::variant<double, Point2>;

inline int dimension_of(const Point& p) { return std::holds_alternative<double>(p) ? 1 : 2; }

// Closed interval [a, b] with a <= b; a single point when a == b.
class Interval {
public:
    Interval(double a, double b);

    double lower() const noexcept { return a_; }
    double upper() const noexcept { return b_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
};

// Simple polygon with at least three vertices, stored counterclockwise.
// Clockwise input is reversed on construction. The closing edge from the
// last vertex back to the first is implicit.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    std::span<const Point2> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }

    // Twice the signed area is positive after normalization; this is the area.
    double area() const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point2> vertices_;
};

// A nonempty compact subset of R^1 or R^2.
class CompactSet {
public:
    CompactSet(Interval interval) : set_(interval) {}
    CompactSet(Polygon polygon) : set_(std::move(polygon)) {}

    int dimension() const noexcept { return set_.index() == 0 ? 1 : 2; }
    bool is_interval() const noexcept { return set_.index() == 0; }

    const Interval& interval() const;
    const Polygon& polygon() const;

    const std::variant<Interval, Polygon>& get() const noexcept { return set_; }

    friend bool operator==(const CompactSet&, const CompactSet&) = default;

private:
    std::variant<Interval, Polygon> set_;
};

// A value together with a certified bound on its absolute error.
struct Estimate {
    double value = 0.0;
    double error_bound = 0.0;
};

double signed_area(std::span<const Point2> ring);
double distance(const Point2& a, const Point2& b);
double segment_distance(const Point2& x, const Point2& a, const Point2& b);

// Interior or boundary (within kTolerance).
bool contains(const Polygon& polygon, const Point2& x);
bool contains(const CompactSet& set, const Point& x);

// A ⊇ B. Intervals exactly; polygons by vertex and edge-midpoint containment
// plus the absence of proper boundary crossings.
bool includes(const CompactSet& outer, const CompactSet& inner);

double point_to_set_distance(const Point& x, const CompactSet& set);

// sup_{a in A} d(a, B). Exact for intervals. For polygons the boundary of A
// is sampled at pitch `spacing`, and the true value lies in
// [value, value + error_bound] with error_bound = spacing.
Estimate directed_hausdorff(const CompactSet& a, const CompactSet& b, double spacing);

// max of the two directed distances; exact for intervals.
Estimate hausdorff(const CompactSet& a, const CompactSet& b, double spacing);

// H(S, {0}): the largest Euclidean norm over S.
double max_norm_on_set(const CompactSet& set);

bool is_convex(const CompactSet& set);
bool is_star_shaped(const CompactSet& set);

CompactSet translate(const CompactSet& set, const Point& offset);
CompactSet scale(const CompactSet& set, double factor);

enum class KernelKind { empty, degenerate, full };

// Kernel of a polygon: the points that see every point of the polygon.
// A degenerate kernel (segment or point, zero area) keeps its vertices but has
// no polygon.
struct Kernel {
    KernelKind kind = KernelKind::empty;
    std::vector<Point2> vertices;

    bool empty() const noexcept { return kind == KernelKind::empty; }
    bool full_dimensional() const noexcept { return kind == KernelKind::full; }
    Polygon polygon() const;
};

Kernel polygon_kernel(const Polygon& polygon);

} // namespace fuzzystar::geometry
