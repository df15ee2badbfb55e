#pragma once

#include "genera/partition.hpp"
#include "genera/rational.hpp"

#include <map>
#include <vector>

namespace genera {

/// Homogeneous polynomial in graded variables p_1, p_2, ... where p_k has
/// weight k.  Monomials are indexed by partitions (the partition (2,1,1)
/// stands for p_2 p_1^2); every stored monomial has the polynomial's weight
/// and zero coefficients are dropped on the fly.
class GradedPolynomial {
public:
    explicit GradedPolynomial(unsigned weight = 0) : weight_(weight) {}
    static GradedPolynomial monomial(const Partition& p, const Rational& c);
    /// The constant 1 (weight 0, empty partition).
    static GradedPolynomial one();

    unsigned weight() const { return weight_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coefficient(const Partition& p) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& p, const Rational& c);

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { a += b; return a; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { a -= b; return a; }
    /// Weights add.
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    friend GradedPolynomial operator*(const Rational& s, const GradedPolynomial& a);

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }

    /// Substitutes values[k] for p_k (indices 1..values.size()-1; any p_k
    /// beyond the table evaluates to 0) and returns the resulting number.
    Rational evaluate(const std::vector<Rational>& values) const;

private:
    unsigned weight_;
    std::map<Partition, Rational> terms_;
};

/// Newton power sum t_1^m + ... expressed in the elementary symmetric
/// functions e_1..e_m, written in the variables p_1..p_m (weight m).
GradedPolynomial power_sum_in_elementary(unsigned m);

/// power_sum_in_elementary(1..cap); index 0 holds the (zero) weight-0 entry.
std::vector<GradedPolynomial> power_sums_in_elementary(unsigned cap);

/// Inhomogeneous element of the graded ring, split by weight: v[w] is the
/// weight-w component.  Used for total Pontryagin classes and for the image
/// of a multiplicative sequence.
using GradedVector = std::vector<GradedPolynomial>;

/// Zero vector with components of weight 0..cap.
GradedVector graded_zero(unsigned cap);
/// 1 + 0 + ... + 0.
GradedVector graded_one(unsigned cap);

GradedVector graded_add(const GradedVector& a, const GradedVector& b);
GradedVector graded_multiply(const GradedVector& a, const GradedVector& b, unsigned cap);
/// exp(a) = sum a^k / k!, requires a[0] = 0; exact because the sum is finite
/// in each weight.
GradedVector graded_exp(const GradedVector& a, unsigned cap);

} // namespace genera
