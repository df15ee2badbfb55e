#pragma once

#include "genera/manifold.hpp"

#include <vector>

namespace genera {

/// Parameters (p, q, i, j) of the sphere-product construction: the model
/// manifold is built from S^p x S^q (dimension d = p + q), fibered over the
/// base S^a x S^b with a = 4i - p and b = 4j - q, so the total space has
/// dimension d + a + b = 4(i + j).  Admissible parameters satisfy the two
/// strict chains  2j < p < 4i  and  2i < q < 4j; these force p, q >= 3
/// (simply connected spin fibers) and a, b >= 1.
class BundleParams {
public:
    /// Validates the inequality chains; throws std::domain_error naming the
    /// first violated inequality.
    static BundleParams validate(unsigned p, unsigned q, unsigned i, unsigned j);

    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    unsigned i() const { return i_; }
    unsigned j() const { return j_; }

    /// d = p + q.
    unsigned fiber_dim() const { return p_ + q_; }
    /// a = 4i - p.
    unsigned base_dim_a() const { return 4 * i_ - p_; }
    /// b = 4j - q.
    unsigned base_dim_b() const { return 4 * j_ - q_; }
    /// k = i + j; the total space is 4k-dimensional.
    unsigned top_index() const { return i_ + j_; }
    unsigned total_dim() const { return 4 * top_index(); }
    /// a + b = 4k - d, the degree of the kappa pairing.
    unsigned kappa_degree() const { return base_dim_a() + base_dim_b(); }

    bool degree_one_base() const { return base_dim_a() == 1 || base_dim_b() == 1; }
    bool spin_fiber_ok() const { return p_ >= 3 && q_ >= 3; }

    friend bool operator==(const BundleParams& x, const BundleParams& y) {
        return x.p_ == y.p_ && x.q_ == y.q_ && x.i_ == y.i_ && x.j_ == y.j_;
    }

private:
    BundleParams(unsigned p, unsigned q, unsigned i, unsigned j) : p_(p), q_(q), i_(i), j_(j) {}
    unsigned p_, q_, i_, j_;
};

/// Surgery bound for closing the sphere product into the model manifold:
/// with n = p + q - 1, the base dimension a + b may not exceed n - 5 for
/// even n and n - 3 for odd n.
struct ClosingCheckReport {
    unsigned n = 0;
    bool n_even = false;
    unsigned bound = 0;
    unsigned base_dim = 0; // a + b
    bool passes = false;
};

ClosingCheckReport closing_check(const BundleParams& bp);

/// Formal total space of the construction: a 4k-manifold whose only nonzero
/// Pontryagin numbers sit on the partitions (i, j) and (i + j); the first is
/// the free input v = p_i p_j, the second is chosen so the signature is 0.
struct TotalSpaceReport {
    BundleParams params;
    Rational pipj;
    Rational p_top;
    Rational signature; // always 0 by construction
    Rational ahat;
    bool psc_obstructed = false; // ahat != 0
    FormalManifold manifold;
};

/// Throws std::domain_error for v = 0 (the construction needs a nonzero
/// pairing to say anything).
TotalSpaceReport total_space_model(const BundleParams& bp, const Rational& pipj);
TotalSpaceReport total_space_model(const BundleParams& bp, const Rational& pipj,
                                   const MultiplicativeSequence& lseq,
                                   const MultiplicativeSequence& aseq);

/// The index-theoretic pairing detecting elements in degree 4k - d = a + b:
/// numerically the A-hat genus of the signature-zero total space.
struct KappaPairingReport {
    unsigned degree = 0;
    Rational value;
    bool nonzero = false;
};

KappaPairingReport kappa_pairing(const BundleParams& bp, const Rational& pipj);

/// All admissible (p, q, i, j) with p + q = d, ordered by (p, i, j).
/// Dimensions above 1000 are rejected (std::domain_error) to keep the
/// enumeration bounded.
std::vector<BundleParams> search(unsigned d);

/// Preferred parameter choice for a given dimension d >= 6, following the
/// residue-of-d-mod-8 scheme (d = 8k + r):
///   r=2: (4k+1, 4k+1, k+1, k+1)   r=3: (4k+1, 4k+2, k+1, k+1)
///   r=4: (4k+2, 4k+2, k+1, k+1)   r=5: (4k+2, 4k+3, k+1, k+2)
///   r=6: (4k+3, 4k+3, k+2, k+2)   r=7: (4k+3, 4k+4, k+2, k+2)
///   r=0: (4k'+4, 4k'+4, k'+2, k'+2) for d = 8k'+8, and
///   r=1: (4k'+4, 4k'+5, k'+2, k'+2) for d = 8k'+9.
/// When the scheme's row violates the admissibility inequalities (d = 6 and
/// d = 13, where k is too small), the row falls back to the first search()
/// result; zero_degree_caveat marks such fallback rows with a base sphere of
/// dimension 1.  Throws std::domain_error when no admissible parameters
/// exist at all (d < 6 and d = 7, 8, 9).
struct TableRowReport {
    unsigned d = 0;
    BundleParams params;
    bool from_residue_table = false;
    unsigned degree_col_a = 0; // a - 1
    unsigned degree_col_b = 0; // b - 1
    bool degree_one_base = false;
    bool zero_degree_caveat = false;
};

TableRowReport table_row(unsigned d);

} // namespace genera
