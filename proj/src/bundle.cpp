#include "genera/bundle.hpp"

#include <stdexcept>
#include <string>

namespace genera {

BundleParams BundleParams::validate(unsigned p, unsigned q, unsigned i, unsigned j) {
    auto fail = [&](const std::string& ineq) {
        throw std::domain_error("bundle parameters (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                ", i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                                ") violate " + ineq);
    };
    if (!(2 * j < p))
        fail("2j < p");
    if (!(p < 4 * i))
        fail("p < 4i");
    if (!(2 * i < q))
        fail("2i < q");
    if (!(q < 4 * j))
        fail("q < 4j");
    return BundleParams(p, q, i, j);
}

ClosingCheckReport closing_check(const BundleParams& bp) {
    ClosingCheckReport r;
    r.n = bp.fiber_dim() - 1;
    r.n_even = (r.n % 2 == 0);
    r.bound = r.n_even ? r.n - 5 : r.n - 3;
    r.base_dim = bp.kappa_degree();
    r.passes = (r.base_dim <= r.bound);
    return r;
}

TotalSpaceReport total_space_model(const BundleParams& bp, const Rational& pipj) {
    unsigned n = bp.top_index();
    return total_space_model(bp, pipj,
                             genus_sequence(GenusId::L, n),
                             genus_sequence(GenusId::Ahat, n));
}

TotalSpaceReport total_space_model(const BundleParams& bp, const Rational& pipj,
                                   const MultiplicativeSequence& lseq,
                                   const MultiplicativeSequence& aseq) {
    if (pipj.is_zero())
        throw std::domain_error("total space model needs a nonzero value for p_i p_j");
    SignatureZeroReport sol = ahat_under_zero_signature(bp.i(), bp.j(), pipj, lseq, aseq);
    std::map<Partition, Rational> numbers;
    numbers[Partition(std::vector<unsigned>{bp.i(), bp.j()})] = pipj;
    numbers[Partition::single(bp.top_index())] = sol.p_top;
    FormalManifold m(bp.top_index(), std::move(numbers));
    return TotalSpaceReport{bp, pipj, sol.p_top, Rational(), sol.ahat, !sol.ahat.is_zero(), std::move(m)};
}

KappaPairingReport kappa_pairing(const BundleParams& bp, const Rational& pipj) {
    SignatureZeroReport sol = ahat_under_zero_signature(bp.i(), bp.j(), pipj);
    return KappaPairingReport{bp.kappa_degree(), sol.ahat, !sol.ahat.is_zero()};
}

std::vector<BundleParams> search(unsigned d) {
    if (d > 1000)
        throw std::domain_error("search is capped at dimension 1000");
    std::vector<BundleParams> out;
    for (unsigned p = 1; p < d; ++p) {
        unsigned q = d - p;
        for (unsigned i = p / 4 + 1; 2 * i < q; ++i)
            for (unsigned j = q / 4 + 1; 2 * j < p; ++j)
                out.push_back(BundleParams::validate(p, q, i, j));
    }
    return out;
}

namespace {

// Residue-scheme candidate for d >= 6, or nullopt when d mod 8 needs k >= 1
// and d is too small for that.
struct Candidate {
    unsigned p, q, i, j;
};

Candidate residue_candidate(unsigned d) {
    unsigned r = d % 8;
    // k so that d matches the row's 8k + r (rows r=0,1 are written 8k+8, 8k+9)
    unsigned k = (r >= 2) ? (d - r) / 8 : (d - r - 8) / 8;
    switch (r) {
    case 2: return {4 * k + 1, 4 * k + 1, k + 1, k + 1};
    case 3: return {4 * k + 1, 4 * k + 2, k + 1, k + 1};
    case 4: return {4 * k + 2, 4 * k + 2, k + 1, k + 1};
    case 5: return {4 * k + 2, 4 * k + 3, k + 1, k + 2};
    case 6: return {4 * k + 3, 4 * k + 3, k + 2, k + 2};
    case 7: return {4 * k + 3, 4 * k + 4, k + 2, k + 2};
    case 0: return {4 * k + 4, 4 * k + 4, k + 2, k + 2};
    default: return {4 * k + 4, 4 * k + 5, k + 2, k + 2}; // r == 1
    }
}

} // namespace

TableRowReport table_row(unsigned d) {
    if (d < 6)
        throw std::domain_error("no admissible bundle parameters below dimension 6");
    Candidate c = residue_candidate(d);
    bool residue_valid = (2 * c.j < c.p) && (c.p < 4 * c.i) && (2 * c.i < c.q) && (c.q < 4 * c.j);
    if (residue_valid) {
        BundleParams bp = BundleParams::validate(c.p, c.q, c.i, c.j);
        return TableRowReport{d, bp, true,
                              bp.base_dim_a() - 1, bp.base_dim_b() - 1,
                              bp.degree_one_base(), false};
    }
    std::vector<BundleParams> all = search(d);
    if (all.empty())
        throw std::domain_error("no admissible bundle parameters in dimension " + std::to_string(d));
    const BundleParams& bp = all.front();
    return TableRowReport{d, bp, false,
                          bp.base_dim_a() - 1, bp.base_dim_b() - 1,
                          bp.degree_one_base(), bp.degree_one_base()};
}

} // namespace genera
