#include "genera/sequence.hpp"

#include "genera/bernoulli.hpp"

#include <stdexcept>

namespace genera {

MultiplicativeSequence MultiplicativeSequence::from_series(const TruncatedSeries& q, unsigned n_max) {
    if (q.coeff(0) != Rational(1))
        throw std::domain_error("sequence: characteristic series must have constant term 1");
    if (q.order() < n_max)
        throw std::domain_error("sequence: series order is below the requested degree");
    TruncatedSeries lq = q.log();
    std::vector<GradedPolynomial> pw = power_sums_in_elementary(n_max);
    GradedVector sum = graded_zero(n_max);
    for (unsigned m = 1; m <= n_max; ++m)
        sum[m] = lq.coeff(m) * pw[m];
    GradedVector k = graded_exp(sum, n_max);
    return MultiplicativeSequence(q, std::move(k));
}

const GradedPolynomial& MultiplicativeSequence::polynomial(unsigned n) const {
    if (n == 0 || n > n_max())
        throw std::out_of_range("sequence: polynomial index out of range");
    return k_[n];
}

Rational MultiplicativeSequence::leading_coefficient(unsigned k) const {
    return polynomial(k).coefficient(Partition::single(k));
}

Rational MultiplicativeSequence::mixed_coefficient(unsigned i, unsigned j) const {
    if (i == 0 || j == 0)
        throw std::out_of_range("sequence: mixed coefficient needs positive indices");
    return polynomial(i + j).coefficient(Partition(std::vector<unsigned>{i, j}));
}

GradedVector MultiplicativeSequence::apply(const GradedVector& a, unsigned cap) const {
    if (cap > n_max())
        throw std::domain_error("sequence: apply cap exceeds available degree");
    if (a.size() <= cap)
        throw std::domain_error("sequence: input vector is missing weight components");
    if (!(a[0] == GradedPolynomial::one()))
        throw std::domain_error("sequence: apply requires constant term 1");
    GradedVector out = graded_one(cap);
    for (unsigned n = 1; n <= cap; ++n) {
        GradedPolynomial acc(n);
        for (const auto& [lambda, c] : k_[n].terms()) {
            GradedPolynomial prod = GradedPolynomial::one();
            for (unsigned part : lambda.parts())
                prod = prod * a[part];
            acc += c * prod;
        }
        out[n] = std::move(acc);
    }
    return out;
}

MultiplicativeSequence genus_sequence(GenusId id, unsigned n_max) {
    return MultiplicativeSequence::from_series(char_series(id, n_max), n_max);
}

Rational closed_form_leading(GenusId id, unsigned k) {
    if (k == 0)
        throw std::out_of_range("closed form needs k >= 1");
    Rational b = unsigned_bernoulli(2 * k);
    Rational fact(factorial(2 * k));
    if (id == GenusId::L)
        return Rational(pow2(2 * k) * (pow2(2 * k - 1) - 1)) * b / fact;
    return -b / (Rational(2) * fact);
}

ProductIdentityReport verify_product_identity(const MultiplicativeSequence& seq, unsigned i, unsigned j) {
    ProductIdentityReport r;
    r.i = i;
    r.j = j;
    r.lambda = (i == j) ? 2 : 1;
    r.lhs = seq.leading_coefficient(i) * seq.leading_coefficient(j);
    r.leading = seq.leading_coefficient(i + j);
    r.mixed = seq.mixed_coefficient(i, j);
    r.rhs = r.leading + Rational(r.lambda) * r.mixed;
    r.holds = (r.lhs == r.rhs);
    return r;
}

} // namespace genera
