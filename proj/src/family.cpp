#include "fuzzystar/family.hpp"

#include <algorithm>

namespace fuzzystar {

namespace {

void require_family(std::span<const LevelFuzzySet> family)
{
    if (family.empty()) {
        throw DomainError("family is empty");
    }
    const int dim = family.front().dimension();
    for (const LevelFuzzySet& u : family) {
        if (u.dimension() != dim) {
            throw DimensionMismatch("family members mix dimensions 1 and 2");
        }
    }
}

} // namespace

double uniform_bound(std::span<const LevelFuzzySet> family, PExponent p)
{
    require_family(family);
    double bound = 0.0;
    for (const LevelFuzzySet& u : family) {
        bound = std::max(bound, p_mean_norm(u, p));
    }
    return bound;
}

double equi_modulus(std::span<const LevelFuzzySet> family, double h, PExponent p, double spacing)
{
    require_family(family);
    double sup = 0.0;
    for (const LevelFuzzySet& u : family) {
        sup = std::max(sup, left_continuity_modulus(u, h, p, spacing));
    }
    return sup;
}

std::string_view to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::consistent_with_precompact:
        return "consistent_with_precompact";
    case VerdictKind::bound_violated:
        return "bound_violated";
    case VerdictKind::equi_violated:
        break;
    }
    return "equi_violated";
}

FamilyReport precompactness_report(std::span<const LevelFuzzySet> family, PExponent p,
                                   std::span<const double> h_grid, double bound_threshold, double eps,
                                   double spacing)
{
    require_family(family);
    require_h_grid(h_grid);
    if (!(eps > 0.0)) {
        throw DomainError("eps must be positive");
    }

    FamilyReport r;
    r.size = family.size();
    r.p = p.value();
    r.bound_threshold = bound_threshold;
    r.eps = eps;
    r.bound_M = uniform_bound(family, p);
    for (const double h : h_grid) {
        r.equi_table.push_back({h, equi_modulus(family, h, p, spacing)});
    }
    r.bound_ok = r.bound_M <= bound_threshold;
    r.equi_ok = r.equi_table.front().modulus < eps;

    if (!r.bound_ok) {
        r.verdict = {VerdictKind::bound_violated, bound_threshold, 0.0, r.bound_M};
    } else if (!r.equi_ok) {
        r.verdict = {VerdictKind::equi_violated, 0.0, r.equi_table.front().h, r.equi_table.front().modulus};
    } else {
        r.verdict = {VerdictKind::consistent_with_precompact, 0.0, 0.0, 0.0};
    }
    r.note = "Evidence only: criteria evaluated on a finite sample of the family at finitely many h; "
             "this is not a proof of precompactness or of its failure.";
    return r;
}

DistanceMatrix pairwise_distances(std::span<const LevelFuzzySet> family, PExponent p, double spacing)
{
    require_family(family);
    DistanceMatrix m(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            m.set(i, j, dp_distance(family[i], family[j], p, spacing).value);
        }
    }
    return m;
}

EpsNet greedy_epsilon_net(std::span<const LevelFuzzySet> family, double eps, PExponent p, double spacing)
{
    require_family(family);
    if (!(eps > 0.0)) {
        throw DomainError("eps must be positive");
    }

    EpsNet net;
    net.eps = eps;
    net.representatives.push_back(0);
    net.assignment.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        net.assignment[i] = {0, i == 0 ? 0.0 : dp_distance(family[i], family[0], p, spacing).value};
    }

    while (true) {
        std::size_t far = 0;
        double far_distance = -1.0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (net.assignment[i].distance > far_distance) {
                far = i;
                far_distance = net.assignment[i].distance;
            }
        }
        if (far_distance <= eps) {
            break;
        }
        net.representatives.push_back(far);
        for (std::size_t i = 0; i < family.size(); ++i) {
            const double d = i == far ? 0.0 : dp_distance(family[i], family[far], p, spacing).value;
            NetAssignment& a = net.assignment[i];
            if (d < a.distance || (d == a.distance && far < a.representative)) {
                a = {far, d};
            }
        }
    }
    return net;
}

} // namespace fuzzystar
