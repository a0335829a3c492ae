#include "fixtures.hpp"
#include "fuzzystar/error.hpp"
#include "fuzzystar/geometry.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace fuzzystar::geometry;
using fixtures::comb;
using fixtures::l_shape;
using fixtures::ring;
using fixtures::square;

namespace {

bool same_vertex_set(std::span<const Point2> a, std::span<const Point2> b, double tol)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (const Point2& p : a) {
        bool found = false;
        for (const Point2& q : b) {
            found = found || distance(p, q) <= tol;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

Polygon random_convex(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = 3 + static_cast<int>(unit(rng) * 6);
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) {
        angles.push_back(2.0 * M_PI * (i + 0.1 + 0.8 * unit(rng)) / n);
    }
    const double r = 0.5 + 3.0 * unit(rng);
    const double cx = -5.0 + 10.0 * unit(rng);
    const double cy = -5.0 + 10.0 * unit(rng);
    std::vector<Point2> v;
    for (double a : angles) {
        v.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    }
    return Polygon(v);
}

// Star polygon around the origin with random radii; star-shaped w.r.t. a
// neighbourhood of the centre but generally not convex.
Polygon random_star(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = 5 + static_cast<int>(unit(rng) * 8);
    std::vector<Point2> v;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * i / n;
        const double r = 0.5 + 2.0 * unit(rng);
        v.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return Polygon(v);
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("interval and polygon construction")
{
    CHECK_NOTHROW(Interval(1.0, 1.0));
    CHECK_THROWS_AS(Interval(2.0, 1.0), fuzzystar::GeometryError);
    CHECK_THROWS_AS(Interval(0.0, INFINITY), fuzzystar::GeometryError);

    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), fuzzystar::GeometryError);
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), fuzzystar::GeometryError);
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), fuzzystar::GeometryError);
    // bow tie
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), fuzzystar::GeometryError);
    // spike doubling back over its own edge
    CHECK_THROWS_AS(Polygon({{0, 0}, {2, 0}, {1, 0}, {1, 1}}), fuzzystar::GeometryError);

    const Polygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(signed_area(cw.vertices()) > 0.0);
    CHECK(cw.area() == doctest::Approx(1.0));
}

TEST_CASE("compact set dimension tag")
{
    const CompactSet i = Interval(0, 1);
    const CompactSet p = square(0, 0, 1);
    CHECK(i.dimension() == 1);
    CHECK(p.dimension() == 2);
    CHECK_THROWS_AS(i.polygon(), fuzzystar::DimensionMismatch);
    CHECK_THROWS_AS(p.interval(), fuzzystar::DimensionMismatch);
}

TEST_CASE("directed hausdorff examples")
{
    const auto same = directed_hausdorff(Interval(0, 1), Interval(0, 1), 0.1);
    CHECK(same.value == 0.0);
    CHECK(same.error_bound == 0.0);

    // sup over {0, 1} of the distance to [2, 3]: the point 0 is 2 away.
    const auto apart = directed_hausdorff(Interval(0, 1), Interval(2, 3), 0.1);
    CHECK(apart.value == 2.0);
    CHECK(apart.error_bound == 0.0);
    CHECK(oracle::grid_directed_hausdorff(0, 1, 2, 3, 1e-3) == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(directed_hausdorff(Interval(2, 3), Interval(0, 1), 0.1).value == 2.0);

    // Interval nested in a larger one: nothing of the small one is far away.
    CHECK(directed_hausdorff(Interval(1, 2), Interval(0, 3), 0.1).value == 0.0);
    CHECK(directed_hausdorff(Interval(0, 3), Interval(1, 2), 0.1).value == 1.0);

    const double spacing = 0.05;
    const auto sq = directed_hausdorff(square(0, 0, 2), square(0, 0, 1), spacing);
    CHECK(sq.error_bound == spacing);
    CHECK(std::abs(sq.value - std::sqrt(2.0)) <= spacing);
    const double grid = oracle::grid_directed_hausdorff(ring(square(0, 0, 2)), ring(square(0, 0, 1)), 0.02);
    CHECK(grid == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(directed_hausdorff(square(0, 0, 1), square(0, 0, 2), spacing).value == 0.0);

    CHECK_THROWS_AS(directed_hausdorff(Interval(0, 1), square(0, 0, 1), 0.1), fuzzystar::DimensionMismatch);
    CHECK_THROWS_AS(directed_hausdorff(square(0, 0, 1), square(0, 0, 2), 0.0), fuzzystar::DomainError);
}

TEST_CASE("hausdorff examples")
{
    CHECK(hausdorff(Interval(0, 2), Interval(1, 3), 0.1).value == 1.0);
    CHECK(oracle::grid_hausdorff(0, 2, 1, 3, 1e-3) == doctest::Approx(1.0).epsilon(1e-3));

    const Polygon p = l_shape();
    CHECK(hausdorff(p, p, 0.1).value == 0.0);

    const auto shifted = hausdorff(square(0, 0, 1), square(1, 0, 1), 0.01);
    CHECK(std::abs(shifted.value - 1.0) <= shifted.error_bound);
    CHECK(oracle::grid_hausdorff(ring(square(0, 0, 1)), ring(square(1, 0, 1)), 0.01)
          == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("directed hausdorff into a nonconvex set peaks inside the source")
{
    // B is the square [0,4]^2 with the hole [1,3]^2 carved out, reached by a
    // thin channel from the right. Every boundary point of A = [0,4]^2 is
    // within 0.1 of B, yet the centre of the hole is at distance 1.
    const Polygon a = square(0, 0, 4);
    const Polygon b({{0, 0}, {4, 0}, {4, 1.9}, {3, 1.9}, {3, 1}, {1, 1}, {1, 3}, {3, 3}, {3, 2.1}, {4, 2.1}, {4, 4},
                     {0, 4}});
    const double spacing = 0.02;
    const auto d = directed_hausdorff(a, b, spacing);
    const double grid = oracle::grid_directed_hausdorff(ring(a), ring(b), 0.01);
    CHECK(grid == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(d.value <= 1.0 + 1e-12);
    CHECK(d.value >= 1.0 - spacing);
}

TEST_CASE("point to set distance")
{
    CHECK(point_to_set_distance(Point2{0.5, 0.5}, square(0, 0, 1)) == 0.0);
    CHECK(point_to_set_distance(Point2{1.0, 0.3}, square(0, 0, 1)) == 0.0);
    CHECK(point_to_set_distance(Point2{2.0, 0.0}, square(0, 0, 1)) == doctest::Approx(1.0));
    CHECK(oracle::dist_to_ring(ring(square(0, 0, 1)), {2.0, 0.0}) == doctest::Approx(1.0));
    CHECK(point_to_set_distance(0.5, Interval(2, 3)) == 1.5);
    CHECK(point_to_set_distance(2.5, Interval(2, 3)) == 0.0);
    CHECK_THROWS_AS(point_to_set_distance(0.5, square(0, 0, 1)), fuzzystar::DimensionMismatch);
}

TEST_CASE("max norm on set")
{
    CHECK(max_norm_on_set(Interval(-1, 3)) == 3.0);
    CHECK(max_norm_on_set(Interval(0, 0)) == 0.0);
    CHECK(max_norm_on_set(square(0, 0, 1)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("convexity and star-shapedness")
{
    CHECK(is_convex(Interval(0, 1)));
    CHECK(is_star_shaped(Interval(3, 3)));
    CHECK(is_convex(square(0, 0, 1)));
    CHECK_FALSE(is_convex(l_shape()));
    CHECK(is_star_shaped(l_shape()));
    CHECK_FALSE(is_star_shaped(comb()));
    // collinear vertex on an edge does not break convexity
    CHECK(is_convex(Polygon({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}})));
}

TEST_CASE("kernel of the L-shape")
{
    const Kernel k = polygon_kernel(l_shape());
    REQUIRE(k.full_dimensional());
    const std::vector<Point2> unit{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(same_vertex_set(k.vertices, unit, 1e-9));
    CHECK(k.polygon().area() == doctest::Approx(1.0));
}

TEST_CASE("kernel of the comb is empty")
{
    const Kernel k = polygon_kernel(comb());
    CHECK(k.empty());
    CHECK(k.vertices.empty());
    CHECK_THROWS_AS(k.polygon(), fuzzystar::GeometryError);
    // brute force agrees: no grid point sees the whole boundary
    CHECK(oracle::visibility_kernel(ring(comb()), 60, 0.25).empty());
}

TEST_CASE("degenerate kernels are reported apart from empty ones")
{
    // Two notches cut from opposite sides whose walls line up on x = 1: the
    // kernel collapses to the segment x = 1, 1 <= y <= 2.
    const Polygon p({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 3}, {1, 3}, {1, 2}, {0, 2}});
    const Kernel k = polygon_kernel(p);
    CHECK(k.kind == KernelKind::degenerate);
    CHECK_FALSE(k.empty());
    CHECK(is_star_shaped(p));
    for (const Point2& v : k.vertices) {
        CHECK(v.x == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(v.y >= 1.0 - 1e-8);
        CHECK(v.y <= 2.0 + 1e-8);
    }
}

TEST_CASE("includes")
{
    CHECK(includes(Interval(0, 2), Interval(0, 1)));
    CHECK_FALSE(includes(Interval(0, 1), Interval(0, 2)));
    CHECK(includes(square(-1, -1, 4), l_shape()));
    CHECK(includes(l_shape(), square(0, 0, 1)));
    CHECK_FALSE(includes(l_shape(), square(0.5, 0.5, 1)));
    CHECK(includes(l_shape(), l_shape()));
    // all vertices inside but an edge leaves through the notch
    const Polygon wide({{0.2, 0.2}, {1.9, 0.2}, {0.2, 1.9}});
    CHECK(includes(l_shape(), Polygon({{0.2, 0.2}, {1.8, 0.2}, {0.2, 1.8}})));
    CHECK_FALSE(includes(l_shape(), wide));
    CHECK_THROWS_AS(includes(Interval(0, 1), square(0, 0, 1)), fuzzystar::DimensionMismatch);
}

TEST_CASE("translate and scale")
{
    CHECK(translate(Interval(0, 1), 2.0) == CompactSet(Interval(2, 3)));
    CHECK(scale(Interval(-1, 2), 2.0) == CompactSet(Interval(-2, 4)));
    CHECK(translate(square(0, 0, 1), Point2{1, 2}) == CompactSet(square(1, 2, 1)));
    CHECK_THROWS_AS(scale(Interval(0, 1), 0.0), fuzzystar::DomainError);
    CHECK_THROWS_AS(translate(Interval(0, 1), Point2{1, 1}), fuzzystar::DimensionMismatch);
}

TEST_CASE("property: interval hausdorff matches the grid oracle")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    const double pitch = 5e-3;
    for (int trial = 0; trial < 60; ++trial) {
        double a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
        if (a > b) std::swap(a, b);
        if (c > d) std::swap(c, d);
        const double exact = hausdorff(Interval(a, b), Interval(c, d), 1.0).value;
        CHECK(std::abs(exact - oracle::grid_hausdorff(a, b, c, d, pitch)) <= pitch);
        CHECK(exact == hausdorff(Interval(c, d), Interval(a, b), 1.0).value);
        const double directed = std::max(directed_hausdorff(Interval(a, b), Interval(c, d), 1.0).value,
                                         directed_hausdorff(Interval(c, d), Interval(a, b), 1.0).value);
        CHECK(exact == doctest::Approx(directed).epsilon(1e-15));
    }
}

TEST_CASE("property: hausdorff symmetry, identity, triangle and scaling")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    std::uniform_real_distribution<double> factor(0.1, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
        double v[6];
        for (double& x : v) x = coord(rng);
        const Interval a(std::min(v[0], v[1]), std::max(v[0], v[1]));
        const Interval b(std::min(v[2], v[3]), std::max(v[2], v[3]));
        const Interval c(std::min(v[4], v[5]), std::max(v[4], v[5]));
        CHECK(hausdorff(a, b, 1).value == hausdorff(b, a, 1).value);
        CHECK(hausdorff(a, a, 1).value == 0.0);
        CHECK(hausdorff(a, c, 1).value <= hausdorff(a, b, 1).value + hausdorff(b, c, 1).value + 1e-12);
        const double s = factor(rng);
        CHECK(hausdorff(scale(a, s), scale(b, s), 1).value
              == doctest::Approx(s * hausdorff(a, b, 1).value).epsilon(1e-12));
    }

    const double spacing = 0.05;
    for (int trial = 0; trial < 15; ++trial) {
        const Polygon a = random_convex(rng);
        const Polygon b = random_star(rng);
        const Polygon c = random_convex(rng);
        const auto ab = hausdorff(a, b, spacing);
        const auto ba = hausdorff(b, a, spacing);
        CHECK(ab.value == ba.value);
        CHECK(hausdorff(a, a, spacing).value == 0.0);
        const auto ac = hausdorff(a, c, spacing);
        const auto bc = hausdorff(b, c, spacing);
        CHECK(ac.value
              <= ab.value + bc.value + 2.0 * (ab.error_bound + bc.error_bound + ac.error_bound));
        const double s = factor(rng);
        const auto scaled = hausdorff(scale(CompactSet(a), s), scale(CompactSet(b), s), s * spacing);
        CHECK(std::abs(scaled.value - s * ab.value) <= s * spacing + 1e-9);
    }
}

TEST_CASE("property: convex implies star-shaped, kernel inside and visible")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Polygon p = trial % 2 == 0 ? random_convex(rng) : random_star(rng);
        const Kernel k = polygon_kernel(p);
        if (is_convex(p)) {
            CHECK(is_star_shaped(p));
            REQUIRE(k.full_dimensional());
            CHECK(same_vertex_set(k.vertices, p.vertices(), 1e-9));
        }
        if (k.empty()) {
            continue;
        }
        if (k.full_dimensional()) {
            CHECK(is_convex(k.polygon()));
        }
        const oracle::Ring r = ring(p);
        const oracle::Ring targets = oracle::boundary_samples(r, 0.1);
        for (const Point2& v : k.vertices) {
            CHECK(contains(p, v));
            CHECK(oracle::sees_all(r, {v.x, v.y}, targets, 24, 1e-7));
        }
    }
}

} // TEST_SUITE
