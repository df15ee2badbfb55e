#pragma once

#include "genera/graded.hpp"
#include "genera/series.hpp"

#include <vector>

namespace genera {

/// Multiplicative sequence K_1, K_2, ... attached to a power series Q(z)
/// with Q(0) = 1.  K_n is a weight-n graded polynomial in p_1..p_n, and the
/// total operation K = 1 + K_1 + K_2 + ... turns products into products.
///
/// Construction: with log Q = sum_{m>=1} c_m z^m, the total sequence is
/// exp(sum_m c_m pw_m) where pw_m is the m-th Newton power sum written in
/// the elementary symmetric functions (identified with p_1..p_m).
class MultiplicativeSequence {
public:
    /// q.order() must be >= n_max and q(0) = 1.
    static MultiplicativeSequence from_series(const TruncatedSeries& q, unsigned n_max);

    unsigned n_max() const { return static_cast<unsigned>(k_.size()) - 1; }
    const TruncatedSeries& source_series() const { return q_; }

    /// K_n for 1 <= n <= n_max.
    const GradedPolynomial& polynomial(unsigned n) const;

    /// Coefficient of p_k in K_k (the coefficient that evaluates the genus
    /// on a top-class generator).
    Rational leading_coefficient(unsigned k) const;

    /// Coefficient of p_i p_j in K_{i+j} (order of i, j irrelevant).
    Rational mixed_coefficient(unsigned i, unsigned j) const;

    /// Applies the total sequence to a graded vector a with a[0] = 1, by
    /// substituting a's components for the variables of each K_n.
    /// Requires cap <= n_max and a to have components up to weight cap.
    GradedVector apply(const GradedVector& a, unsigned cap) const;

private:
    MultiplicativeSequence(TruncatedSeries q, GradedVector k) : q_(std::move(q)), k_(std::move(k)) {}

    TruncatedSeries q_;
    GradedVector k_; // k_[n] = K_n, k_[0] = 1
};

/// The multiplicative sequence of a built-in genus, computed from its
/// characteristic series.
MultiplicativeSequence genus_sequence(GenusId id, unsigned n_max);

/// Closed form for the leading coefficient, in terms of Bernoulli numbers:
///   L:    s_k = 2^{2k} (2^{2k-1} - 1) |B_{2k}| / (2k)!
///   Ahat: a_k = -|B_{2k}| / (2 (2k)!)
Rational closed_form_leading(GenusId id, unsigned k);

/// Check of the product identity
///   s_i s_j = s_{i+j} + lambda s_{i,j},  lambda = 2 if i == j else 1,
/// where s_k is the leading and s_{i,j} the mixed coefficient of the given
/// sequence.  Exact; holds is lhs == rhs.
struct ProductIdentityReport {
    unsigned i = 0, j = 0;
    unsigned lambda = 1;
    Rational lhs;     // s_i s_j
    Rational rhs;     // s_{i+j} + lambda s_{i,j}
    Rational leading; // s_{i+j}
    Rational mixed;   // s_{i,j}
    bool holds = false;
};

ProductIdentityReport verify_product_identity(const MultiplicativeSequence& seq, unsigned i, unsigned j);

} // namespace genera
