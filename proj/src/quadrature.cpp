#include "fuzzystar/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fuzzystar {

namespace {

constexpr int kMinDepth = 4;

struct Simpson {
    const std::function<double(double)>& f;
    int max_depth;
    QuadratureResult result;
    double unresolved = 0.0;

    double eval(double x)
    {
        ++result.evaluations;
        const double y = f(x);
        if (!std::isfinite(y)) {
            throw QuadratureError("integrand is not finite at " + std::to_string(x), result.value);
        }
        return y;
    }

    void panel(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth)
    {
        const double m = (a + b) / 2.0;
        const double lm = (a + m) / 2.0;
        const double rm = (m + b) / 2.0;
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth >= kMinDepth && std::abs(delta) <= 15.0 * tol) {
            result.value += left + right + delta / 15.0;
            result.error_estimate += std::abs(delta) / 15.0;
            return;
        }
        if (depth >= max_depth) {
            result.value += left + right + delta / 15.0;
            result.error_estimate += std::abs(delta) / 15.0;
            unresolved += std::abs(delta) / 15.0;
            return;
        }
        panel(a, m, fa, flm, fm, left, tol / 2.0, depth + 1);
        panel(m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
    }
};

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi, double tol,
                                    int max_depth)
{
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    if (!(lo <= hi)) {
        throw DomainError("quadrature bounds are reversed");
    }
    Simpson s{f, max_depth, {}, 0.0};
    if (lo == hi) {
        return s.result;
    }
    const double fa = s.eval(lo);
    const double fm = s.eval((lo + hi) / 2.0);
    const double fb = s.eval(hi);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    // Below a few ulps of the integral the Simpson difference is rounding noise.
    const double noise_floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(whole);
    const double effective = std::max(tol, noise_floor);
    s.panel(lo, hi, fa, fm, fb, whole, effective, 0);
    if (s.unresolved > effective) {
        throw QuadratureError("adaptive quadrature did not converge within depth " + std::to_string(max_depth),
                              s.result.value);
    }
    return s.result;
}

} // namespace fuzzystar
