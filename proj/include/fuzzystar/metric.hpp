#pragma once

#include "fuzzystar/error.hpp"
#include "fuzzystar/fuzzy.hpp"
#include "fuzzystar/geometry.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace fuzzystar {

// Boundary sampling pitch used for polygon Hausdorff distances when the
// caller does not pick one.
inline constexpr double kDefaultSpacing = 1e-3;

// Maps alpha in [0, 1] to the alpha-cut. Must be nested: alpha <= beta
// implies cut(alpha) ⊇ cut(beta).
using CutFunction = std::function<geometry::CompactSet(double)>;

// Raised when adaptive quadrature fails to reach its tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double best_estimate)
        : Error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

// Adaptive Simpson on [lo, hi] to absolute tolerance `tol`. Panels reaching
// `max_depth` are accepted as they are; their error estimates are summed, and
// QuadratureError is thrown when that sum exceeds `tol`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol,
                                    int max_depth = 40);

// Step-exact d_p: (∫_0^1 H([u]_α, [v]_α)^p dα)^{1/p} summed over the merged
// alpha grid. error_bound is zero in R^1.
geometry::Estimate dp_distance(const LevelFuzzySet& u, const LevelFuzzySet& v, PExponent p,
                               double spacing = kDefaultSpacing);

// d_p by adaptive quadrature of H(α)^p to tolerance tol^p, for cut maps that
// are not step functions.
double dp_distance_quadrature(const CutFunction& u, const CutFunction& v, PExponent p, double tol,
                              double spacing = kDefaultSpacing);

// d_p(u, crisp origin), exact on step representations.
double p_mean_norm(const LevelFuzzySet& u, PExponent p);
double p_mean_norm_quadrature(const CutFunction& u, PExponent p, double tol);

// (∫_h^1 H([u]_α, [u]_{α-h})^p dα)^{1/p}, exact on step representations.
double left_continuity_modulus(const LevelFuzzySet& u, double h, PExponent p, double spacing = kDefaultSpacing);
double left_continuity_modulus_quadrature(const CutFunction& u, double h, PExponent p, double tol,
                                          double spacing = kDefaultSpacing);

struct ModulusSample {
    double h = 0.0;
    double modulus = 0.0;
};

class ModulusCurve {
public:
    ModulusCurve(std::vector<ModulusSample> samples, PExponent p);

    std::span<const ModulusSample> samples() const noexcept { return samples_; }
    PExponent p() const noexcept { return p_; }

private:
    std::vector<ModulusSample> samples_;
    PExponent p_;
};

// Modulus at every h of a strictly increasing grid in (0, 1).
ModulusCurve modulus_curve(const LevelFuzzySet& u, std::span<const double> h_grid, PExponent p,
                           double spacing = kDefaultSpacing);

// Largest grid value δ such that the modulus is below eps at every grid point
// up to and including δ; nullopt when the smallest grid point already fails.
// This is evidence on the grid only, not a statement about every real h < δ.
std::optional<double> find_delta(const LevelFuzzySet& u, double eps, PExponent p, std::span<const double> h_grid,
                                 double spacing = kDefaultSpacing);

// Cut maps for the quadrature path.
CutFunction step_cuts(LevelFuzzySet u);

// Interval endpoints interpolated linearly in alpha between stored levels;
// below the lowest level the lowest set is used. R^1 only.
CutFunction linear_interval_cuts(LevelFuzzySet u);

// Triangular fuzzy number with support [a, c] and peak b: [a + (b-a)α, c - (c-b)α].
CutFunction triangular(double a, double b, double c);

void require_h_grid(std::span<const double> h_grid);

} // namespace fuzzystar
