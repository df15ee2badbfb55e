#include "genera/conclusions.hpp"

#include <stdexcept>

namespace genera {

std::set<unsigned> cohomology_degrees(const std::vector<unsigned>& sphere_dims) {
    std::set<unsigned> sums{0};
    for (unsigned d : sphere_dims) {
        std::set<unsigned> next = sums;
        for (unsigned s : sums)
            next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

DegreeReport degree_report(const BundleParams& bp) {
    DegreeReport r;
    r.base_a = bp.base_dim_a();
    r.base_b = bp.base_dim_b();
    r.kappa_degree = bp.kappa_degree();
    r.base_cohomology = cohomology_degrees({r.base_a, r.base_b});
    for (unsigned c : r.base_cohomology)
        if (r.kappa_degree >= c + 2)
            r.m_set.insert(r.kappa_degree - c - 1);
    r.pi1_flag = bp.degree_one_base();
    return r;
}

HurewiczReport hurewicz_homotopy_set(const std::set<unsigned>& degrees) {
    HurewiczReport r;
    r.degrees = degrees;
    r.pi1_possible = degrees.count(1) > 0;
    std::set<unsigned> reduced = degrees;
    reduced.erase(0);
    reduced.erase(1);
    if (reduced.empty()) {
        if (!r.pi1_possible)
            throw std::domain_error("no degrees above 1 and no fundamental-group degree: nothing to detect");
        r.threshold = 1;
        return r;
    }
    unsigned top = *reduced.rbegin();
    unsigned r_val = 1;
    for (;; ++r_val) {
        bool ok = true;
        for (unsigned m : reduced)
            if (m > r_val && m > 2 * r_val + 1) {
                ok = false;
                break;
            }
        if (ok)
            break;
        if (r_val > top)
            throw std::logic_error("hurewicz threshold search ran away");
    }
    r.threshold = r_val;
    if (r_val >= 2)
        for (unsigned j = 2; j <= r_val; ++j)
            r.j_set.insert(j);
    for (unsigned m : reduced)
        if (m > r_val)
            r.j_set.insert(m);
    return r;
}

namespace {

std::string join_set(const std::set<unsigned>& s) {
    std::string out = "{";
    bool first = true;
    for (unsigned v : s) {
        if (!first)
            out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

const char* kSpace = "the space of positive scalar curvature metrics on the model manifold";

std::string alt_pi1_infinite() {
    return std::string("pi_1 of ") + kSpace + " is infinite";
}

std::string alt_pij(const std::set<unsigned>& j_set) {
    return std::string("pi_j of ") + kSpace + " is rationally nonzero for some j in " + join_set(j_set);
}

std::string alt_collapse() {
    return std::string("a comparison map collapses infinitely many path components of ") + kSpace + " to one";
}

std::string alt_h1() {
    return std::string("H_1 of ") + kSpace +
           " is rationally nonzero (equivalently, pi_1 has an element of infinite order in its abelianisation)";
}

std::string alt_pi2() {
    return std::string("pi_2 of ") + kSpace + " is rationally nonzero";
}

} // namespace

ConclusionReport theorem_conclusion(unsigned d) {
    if (d < 6)
        throw std::domain_error("theorem not applicable: dimension " + std::to_string(d) + " is below 6");
    TableRowReport row = [&] {
        try {
            return table_row(d);
        } catch (const std::domain_error&) {
            throw std::domain_error("theorem not applicable: no admissible bundle parameters in dimension " +
                                    std::to_string(d));
        }
    }();
    ConclusionReport r{d, "generic", row, degree_report(row.params), HurewiczReport{}, {}, {}, {}};
    r.hurewicz = hurewicz_homotopy_set(r.degrees.m_set);
    if (d == 6) {
        r.mode = "dim6";
        r.alternatives = {alt_collapse(), alt_h1()};
    } else if (row.zero_degree_caveat) {
        r.mode = "dim13";
        std::string homotopy_alt =
            r.hurewicz.j_set == std::set<unsigned>{2} ? alt_pi2() : alt_pij(r.hurewicz.j_set);
        r.alternatives = {alt_collapse(), alt_pi1_infinite(), homotopy_alt};
    } else {
        r.alternatives = {alt_pi1_infinite(), alt_pij(r.hurewicz.j_set)};
    }
    if (d % 8 == 6 && d != 6)
        r.notes.push_back("dimension is congruent to 6 mod 8, so the path-component/H_1 dichotomy holds as well");
    if (d % 2 == 0) {
        for (const BundleParams& bp : search(d))
            if (bp.p() == bp.q() && bp.i() == bp.j())
                r.symmetric_pairs.push_back(degree_report(bp).m_set);
    }
    return r;
}

} // namespace genera
