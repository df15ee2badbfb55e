#pragma once

#include "genera/bundle.hpp"

#include <set>
#include <string>
#include <vector>

namespace genera {

/// Degrees with nonzero cohomology of a product of spheres S^{d_1} x ... :
/// all subset sums of the dimension list.
std::set<unsigned> cohomology_degrees(const std::vector<unsigned>& sphere_dims);

/// Degrees in which the fiberwise index pairing detects nonzero rational
/// cohomology of the space of positive scalar curvature metrics: for every
/// base cohomology degree c with a + b - c >= 2 the degree a + b - c - 1 is
/// detected.  pi1_flag records a degree-one base sphere (detection then only
/// reaches the fundamental group).
struct DegreeReport {
    unsigned base_a = 0, base_b = 0;
    unsigned kappa_degree = 0; // a + b
    std::set<unsigned> base_cohomology;
    std::set<unsigned> m_set;
    bool pi1_flag = false;
};

DegreeReport degree_report(const BundleParams& bp);

/// Converts nonzero rational cohomology in the degrees D into nonzero
/// rational homotopy: with D' = D minus {0, 1}, the threshold r is the
/// smallest r >= 1 such that every m in D' above r satisfies m <= 2r + 1
/// (the rational Hurewicz range).  Then some pi_j with j in
/// {2..r} union { m in D' : m > r } is rationally nonzero, unless r covers
/// everything trivially.  1 in D only ever yields a fundamental group
/// statement (pi1_possible).
struct HurewiczReport {
    std::set<unsigned> degrees;
    bool pi1_possible = false;
    unsigned threshold = 0;
    std::set<unsigned> j_set;
};

HurewiczReport hurewicz_homotopy_set(const std::set<unsigned>& degrees);

/// Final statement for a given dimension d:
///  - generic case (d >= 10, d != 13): either pi_1 of the space of psc
///    metrics on the model manifold is infinite, or pi_j is rationally
///    nonzero for some j in the j-set;
///  - d = 6: path-component / first-homology dichotomy;
///  - d = 13: three-way alternative with pi_2.
/// The report also collects symmetric parameter choices p = q = d/2, i = j
/// (each gives its own two-element detection set) and a note for dimensions
/// congruent to 6 mod 8, where the component-counting statement holds too.
struct ConclusionReport {
    unsigned dim = 0;
    std::string mode; // "generic", "dim6" or "dim13"
    TableRowReport row;
    DegreeReport degrees;
    HurewiczReport hurewicz;
    std::vector<std::string> alternatives;
    std::vector<std::string> notes;
    std::vector<std::set<unsigned>> symmetric_pairs;
};

/// Throws std::domain_error with a "theorem not applicable" message when
/// d < 6 or no admissible parameters exist (d = 7, 8, 9).
ConclusionReport theorem_conclusion(unsigned d);

} // namespace genera
