#pragma once

#include "genera/sequence.hpp"

#include <map>
#include <optional>

namespace genera {

/// Formal closed oriented 4n-manifold: nothing but its dimension and an
/// assignment of rational values to the Pontryagin numbers, one value per
/// partition of n.  Absent partitions count as zero.
class FormalManifold {
public:
    FormalManifold(unsigned quarter_dim, std::map<Partition, Rational> numbers);

    /// n, where the dimension is 4n.
    unsigned quarter_dim() const { return n_; }
    unsigned dimension() const { return 4 * n_; }
    const std::map<Partition, Rational>& numbers() const { return numbers_; }
    Rational number(const Partition& p) const;

private:
    unsigned n_;
    std::map<Partition, Rational> numbers_;
};

/// Genus of the manifold under the sequence: sum over K_n's monomials of
/// coefficient times the matching Pontryagin number.  Requires
/// seq.n_max() >= quarter_dim.
Rational genus(const FormalManifold& m, const MultiplicativeSequence& seq);

/// Convenience wrappers that build the needed sequence on the fly.
Rational signature(const FormalManifold& m);
Rational ahat_genus(const FormalManifold& m);

struct Matrix2 {
    Rational a, b, c, d; // rows (a b) / (c d)
    Rational det() const { return a * d - b * c; }
};

/// The 2x2 coefficient matrices controlling manifolds with signature 0 and
/// A-hat genus 1 in dimension 4(i+j), built from only the two Pontryagin
/// numbers p_{i+j} and p_i p_j:
///   full    = [[s_i s_j, s_{i+j}], [a_i a_j, a_{i+j}]]
///   reduced = [[(2^{2i-1}-1)(2^{2j-1}-1), 2^{2(i+j)-1}-1], [1/4, -1/2]],
/// the reduced form arising from the full one by scaling rows and columns
/// with nonzero factors, so nonsingularity can be read off either.
/// det(reduced) = -(1/4)(2^{2i}-1)(2^{2j}-1) != 0.
struct CriterionMatrixReport {
    unsigned i = 0, j = 0;
    Matrix2 full;
    Rational full_det;
    Matrix2 reduced;
    Rational reduced_det;
    bool nonsingular = false;
};

/// Computes both matrices from the actual L- and A-hat coefficients.  The
/// two-argument overload builds sequences up to degree i+j; the five-argument
/// one reuses caller-provided sequences (cheaper inside sweeps).
CriterionMatrixReport criterion_matrices(unsigned i, unsigned j);
CriterionMatrixReport criterion_matrices(unsigned i, unsigned j,
                                         const MultiplicativeSequence& lseq,
                                         const MultiplicativeSequence& aseq);

/// Solves the signature-zero system in dimension 4(i+j): given the value
/// v = p_i p_j, the unique p_{i+j} with signature 0 is
/// -(s_{i,j}/s_{i+j}) v, and the A-hat genus of the resulting manifold is
/// a_{i+j} p_{i+j} + a_{i,j} v.  degenerate marks the uninformative input
/// v = 0 (then everything vanishes).
struct SignatureZeroReport {
    unsigned i = 0, j = 0;
    Rational pipj;
    Rational p_top;
    Rational ahat;
    bool degenerate = false;
};

SignatureZeroReport ahat_under_zero_signature(unsigned i, unsigned j, const Rational& pipj);
SignatureZeroReport ahat_under_zero_signature(unsigned i, unsigned j, const Rational& pipj,
                                              const MultiplicativeSequence& lseq,
                                              const MultiplicativeSequence& aseq);

} // namespace genera
