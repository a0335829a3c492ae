#pragma once

#include "fuzzystar/fuzzy.hpp"
#include "fuzzystar/metric.hpp"

#include <span>
#include <string>
#include <vector>

namespace fuzzystar {

// Numerical evidence for the two precompactness criteria on a finite sample
// of a family: a uniform bound on the p-mean norms, and moduli of
// left-continuity that become small uniformly as h shrinks.

// Least M with d_p(u, crisp origin) <= M for every member.
double uniform_bound(std::span<const LevelFuzzySet> family, PExponent p);

// sup over members of left_continuity_modulus(u, h, p).
double equi_modulus(std::span<const LevelFuzzySet> family, double h, PExponent p, double spacing = kDefaultSpacing);

enum class VerdictKind { consistent_with_precompact, bound_violated, equi_violated };

std::string_view to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::consistent_with_precompact;
    double threshold = 0.0;  // bound_violated
    double h = 0.0;          // equi_violated
    double value = 0.0;      // equi_violated: the offending sup-modulus
};

struct FamilyReport {
    std::size_t size = 0;
    double p = 1.0;
    double bound_M = 0.0;
    std::vector<ModulusSample> equi_table;  // (h, sup-modulus over the family)
    double bound_threshold = 0.0;
    double eps = 0.0;
    bool bound_ok = false;
    bool equi_ok = false;
    Verdict verdict;
    std::string note;
};

// Criterion (i): bound_M <= bound_threshold. Criterion (ii): the sup-modulus
// at the smallest grid h is below eps; the whole table is attached. When both
// fail the verdict reports the bound.
FamilyReport precompactness_report(std::span<const LevelFuzzySet> family, PExponent p,
                                   std::span<const double> h_grid, double bound_threshold, double eps,
                                   double spacing = kDefaultSpacing);

// Symmetric n x n matrix of d_p values with zero diagonal.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double value)
    {
        data_[i * n_ + j] = value;
        data_[j * n_ + i] = value;
    }

private:
    std::size_t n_;
    std::vector<double> data_;
};

DistanceMatrix pairwise_distances(std::span<const LevelFuzzySet> family, PExponent p,
                                  double spacing = kDefaultSpacing);

struct NetAssignment {
    std::size_t representative = 0;
    double distance = 0.0;
};

struct EpsNet {
    std::vector<std::size_t> representatives;
    double eps = 0.0;
    std::vector<NetAssignment> assignment;  // one entry per member
};

// Farthest-point traversal from member 0 until every member is within eps of
// a representative. Ties go to the lowest index.
EpsNet greedy_epsilon_net(std::span<const LevelFuzzySet> family, double eps, PExponent p,
                          double spacing = kDefaultSpacing);

} // namespace fuzzystar
