#include "genera/manifold.hpp"

#include <stdexcept>

namespace genera {

FormalManifold::FormalManifold(unsigned quarter_dim, std::map<Partition, Rational> numbers)
    : n_(quarter_dim), numbers_(std::move(numbers)) {
    if (n_ == 0)
        throw std::domain_error("manifold: dimension must be a positive multiple of 4");
    for (auto it = numbers_.begin(); it != numbers_.end();) {
        if (it->first.weight() != n_)
            throw std::domain_error("manifold: Pontryagin number " + it->first.str() +
                                    " does not match dimension " + std::to_string(dimension()));
        it = it->second.is_zero() ? numbers_.erase(it) : std::next(it);
    }
}

Rational FormalManifold::number(const Partition& p) const {
    auto it = numbers_.find(p);
    return it == numbers_.end() ? Rational() : it->second;
}

Rational genus(const FormalManifold& m, const MultiplicativeSequence& seq) {
    if (seq.n_max() < m.quarter_dim())
        throw std::domain_error("genus: sequence not computed far enough for this dimension");
    Rational total;
    for (const auto& [p, c] : seq.polynomial(m.quarter_dim()).terms())
        total += c * m.number(p);
    return total;
}

Rational signature(const FormalManifold& m) {
    return genus(m, genus_sequence(GenusId::L, m.quarter_dim()));
}

Rational ahat_genus(const FormalManifold& m) {
    return genus(m, genus_sequence(GenusId::Ahat, m.quarter_dim()));
}

CriterionMatrixReport criterion_matrices(unsigned i, unsigned j) {
    unsigned n = i + j;
    return criterion_matrices(i, j, genus_sequence(GenusId::L, n), genus_sequence(GenusId::Ahat, n));
}

CriterionMatrixReport criterion_matrices(unsigned i, unsigned j,
                                         const MultiplicativeSequence& lseq,
                                         const MultiplicativeSequence& aseq) {
    if (i == 0 || j == 0)
        throw std::domain_error("criterion matrices need i, j >= 1");
    CriterionMatrixReport r;
    r.i = i;
    r.j = j;
    r.full.a = lseq.leading_coefficient(i) * lseq.leading_coefficient(j);
    r.full.b = lseq.leading_coefficient(i + j);
    r.full.c = aseq.leading_coefficient(i) * aseq.leading_coefficient(j);
    r.full.d = aseq.leading_coefficient(i + j);
    r.full_det = r.full.det();
    r.reduced.a = Rational((pow2(2 * i - 1) - 1) * (pow2(2 * j - 1) - 1));
    r.reduced.b = Rational(pow2(2 * (i + j) - 1) - 1);
    r.reduced.c = Rational(1, 4);
    r.reduced.d = Rational(-1, 2);
    r.reduced_det = r.reduced.det();
    r.nonsingular = !r.full_det.is_zero();
    return r;
}

SignatureZeroReport ahat_under_zero_signature(unsigned i, unsigned j, const Rational& pipj) {
    unsigned n = i + j;
    return ahat_under_zero_signature(i, j, pipj,
                                     genus_sequence(GenusId::L, n),
                                     genus_sequence(GenusId::Ahat, n));
}

SignatureZeroReport ahat_under_zero_signature(unsigned i, unsigned j, const Rational& pipj,
                                              const MultiplicativeSequence& lseq,
                                              const MultiplicativeSequence& aseq) {
    if (i == 0 || j == 0)
        throw std::domain_error("signature-zero solver needs i, j >= 1");
    SignatureZeroReport r;
    r.i = i;
    r.j = j;
    r.pipj = pipj;
    r.degenerate = pipj.is_zero();
    Rational s_top = lseq.leading_coefficient(i + j);
    Rational s_mixed = lseq.mixed_coefficient(i, j);
    r.p_top = -(s_mixed / s_top) * pipj;
    r.ahat = aseq.leading_coefficient(i + j) * r.p_top + aseq.mixed_coefficient(i, j) * pipj;
    return r;
}

} // namespace genera
