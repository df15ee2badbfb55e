#include "genera/manifold.hpp"

#include "genera/bernoulli.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using namespace genera;

namespace {

FormalManifold make(unsigned quarter_dim, std::initializer_list<std::pair<std::vector<unsigned>, const char*>> vals) {
    std::map<Partition, Rational> numbers;
    for (const auto& [parts, value] : vals)
        numbers[Partition(std::vector<unsigned>(parts))] = Rational::parse(value);
    return FormalManifold(quarter_dim, std::move(numbers));
}

} // namespace

TEST_CASE("formal manifolds validate their Pontryagin numbers") {
    CHECK_THROWS_AS(FormalManifold(0, {}), std::domain_error);
    std::map<Partition, Rational> wrong{{Partition::single(3), Rational(1)}};
    CHECK_THROWS_AS(FormalManifold(2, wrong), std::domain_error);

    FormalManifold m = make(2, {{{2}, "0"}, {{1, 1}, "896"}});
    CHECK(m.dimension() == 8);
    CHECK(m.numbers().size() == 1); // stored zeros are dropped
    CHECK(m.number(Partition::single(2)).is_zero());
    CHECK(m.number(Partition(std::vector<unsigned>{1, 1})) == Rational(896));
}

TEST_CASE("signature and A-hat of the complex projective planes") {
    // CP^2: p_1 = 3, signature 1, A-hat -1/8.
    FormalManifold cp2 = make(1, {{{1}, "3"}});
    CHECK(signature(cp2) == Rational(1));
    CHECK(ahat_genus(cp2) == Rational::parse("-1/8"));

    // CP^4: p_1^2 = 25, p_2 = 10, signature 1, A-hat 3/128.
    FormalManifold cp4 = make(2, {{{1, 1}, "25"}, {{2}, "10"}});
    CHECK(signature(cp4) == Rational(1));
    CHECK(ahat_genus(cp4) == Rational::parse("3/128"));
}

TEST_CASE("genus over an empty number table is zero") {
    FormalManifold m(3, {});
    CHECK(signature(m).is_zero());
    CHECK(ahat_genus(m).is_zero());
}

TEST_CASE("genus requires a sequence of sufficient degree") {
    FormalManifold m = make(2, {{{2}, "1"}});
    CHECK_THROWS_AS(genus(m, genus_sequence(GenusId::L, 1)), std::domain_error);
}

TEST_CASE("criterion matrices: frozen (1,1) instance") {
    CriterionMatrixReport r = criterion_matrices(1, 1);
    CHECK(r.full.a == Rational::parse("1/9"));
    CHECK(r.full.b == Rational::parse("7/45"));
    CHECK(r.full.c == Rational::parse("1/576"));
    CHECK(r.full.d == Rational::parse("-1/1440"));
    CHECK(r.full_det == Rational::parse("-1/2880"));
    CHECK(r.reduced.a == Rational(1));
    CHECK(r.reduced.b == Rational(7));
    CHECK(r.reduced.c == Rational::parse("1/4"));
    CHECK(r.reduced.d == Rational::parse("-1/2"));
    CHECK(r.reduced_det == Rational::parse("-9/4"));
    CHECK(r.nonsingular);
    CHECK_THROWS_AS(criterion_matrices(0, 1), std::domain_error);
}

TEST_CASE("full and reduced matrices differ by row and column scalings") {
    // full = diag(4^{i+j}, 1) * reduced * diag(c1, c2) with
    // c1 = |B_2i||B_2j| / ((2i)! (2j)!) and c2 = |B_2(i+j)| / (2(i+j))!,
    // so the determinants are related by the product of those factors.
    MultiplicativeSequence l = genus_sequence(GenusId::L, 10);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, 10);
    for (unsigned i = 1; i <= 5; ++i)
        for (unsigned j = i; i + j <= 10; ++j) {
            CriterionMatrixReport r = criterion_matrices(i, j, l, a);
            Rational c1 = unsigned_bernoulli(2 * i) * unsigned_bernoulli(2 * j) /
                          Rational(factorial(2 * i) * factorial(2 * j));
            Rational c2 = unsigned_bernoulli(2 * (i + j)) / Rational(factorial(2 * (i + j)));
            CHECK(r.full_det == Rational(pow2(2 * (i + j))) * c1 * c2 * r.reduced_det);
            CHECK(r.nonsingular);
        }
}

TEST_CASE("signature-zero solver: worked example in dimension 8") {
    SignatureZeroReport r = ahat_under_zero_signature(1, 1, 896);
    CHECK(r.p_top == Rational(128));
    CHECK(r.ahat == Rational(1));
    CHECK(!r.degenerate);

    SignatureZeroReport zero = ahat_under_zero_signature(1, 1, 0);
    CHECK(zero.degenerate);
    CHECK(zero.p_top.is_zero());
    CHECK(zero.ahat.is_zero());
}

TEST_CASE("signature-zero solver against direct genus evaluation") {
    MultiplicativeSequence l = genus_sequence(GenusId::L, 8);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, 8);
    std::mt19937 gen(515151);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 20);
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = i; j <= 4; ++j)
            for (int t = 0; t < 8; ++t) {
                int n = num(gen);
                Rational v(BigInt(n == 0 ? 7 : n), BigInt(den(gen)));
                SignatureZeroReport r = ahat_under_zero_signature(i, j, v, l, a);
                std::map<Partition, Rational> numbers{
                    {Partition(std::vector<unsigned>{i, j}), v},
                    {Partition::single(i + j), r.p_top},
                };
                FormalManifold m(i + j, std::move(numbers));
                CHECK(genus(m, l).is_zero());
                CHECK(genus(m, a) == r.ahat);
                CHECK(!r.ahat.is_zero());
            }
}
