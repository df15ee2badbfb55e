#include "genera/bundle.hpp"

#include "doctest.h"

#include <array>
#include <stdexcept>

using namespace genera;

namespace {

bool params_equal(const std::vector<BundleParams>& got,
                  const std::vector<std::array<unsigned, 4>>& want) {
    if (got.size() != want.size())
        return false;
    for (std::size_t k = 0; k < got.size(); ++k)
        if (!(got[k] == BundleParams::validate(want[k][0], want[k][1], want[k][2], want[k][3])))
            return false;
    return true;
}

std::string violation(unsigned p, unsigned q, unsigned i, unsigned j) {
    try {
        BundleParams::validate(p, q, i, j);
    } catch (const std::domain_error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("validation names the first violated inequality") {
    CHECK(violation(3, 3, 1, 1).empty());
    CHECK(violation(4, 9, 2, 2).find("2j < p") != std::string::npos);
    CHECK(violation(5, 11, 1, 2).find("p < 4i") != std::string::npos);
    CHECK(violation(5, 4, 2, 2).find("2i < q") != std::string::npos);
    CHECK(violation(5, 9, 2, 2).find("q < 4j") != std::string::npos);
    CHECK(violation(6, 7, 2, 3).find("2j < p") != std::string::npos); // the dimension-13 residue row
}

TEST_CASE("computed quantities") {
    BundleParams bp = BundleParams::validate(3, 3, 1, 1);
    CHECK(bp.fiber_dim() == 6);
    CHECK(bp.base_dim_a() == 1);
    CHECK(bp.base_dim_b() == 1);
    CHECK(bp.top_index() == 2);
    CHECK(bp.total_dim() == 8);
    CHECK(bp.kappa_degree() == 2);
    CHECK(bp.degree_one_base());
    CHECK(bp.spin_fiber_ok());

    BundleParams big = BundleParams::validate(7, 8, 3, 3);
    CHECK(big.fiber_dim() == 15);
    CHECK(big.base_dim_a() == 5);
    CHECK(big.base_dim_b() == 4);
    CHECK(big.total_dim() == 24);
    CHECK(big.kappa_degree() == 9);
    CHECK(!big.degree_one_base());
}

TEST_CASE("closing check fields and bound") {
    ClosingCheckReport r = closing_check(BundleParams::validate(3, 3, 1, 1));
    CHECK(r.n == 5);
    CHECK(!r.n_even);
    CHECK(r.bound == 2);
    CHECK(r.base_dim == 2);
    CHECK(r.passes);

    ClosingCheckReport r2 = closing_check(BundleParams::validate(6, 7, 2, 2));
    CHECK(r2.n == 12);
    CHECK(r2.n_even);
    CHECK(r2.bound == 7);
    CHECK(r2.base_dim == 3);
    CHECK(r2.passes);
}

TEST_CASE("closing bound holds for every admissible parameter set up to d = 40") {
    for (unsigned d = 6; d <= 40; ++d)
        for (const BundleParams& bp : search(d))
            CHECK(closing_check(bp).passes);
}

TEST_CASE("search: frozen small dimensions and deterministic order") {
    CHECK(params_equal(search(6), {{3, 3, 1, 1}}));
    CHECK(search(7).empty());
    CHECK(search(8).empty());
    CHECK(search(9).empty());
    CHECK(params_equal(search(10), {{5, 5, 2, 2}}));
    CHECK(params_equal(search(11), {{5, 6, 2, 2}, {6, 5, 2, 2}}));
    CHECK(params_equal(search(13), {{6, 7, 2, 2}, {6, 7, 3, 2}, {7, 6, 2, 2}, {7, 6, 2, 3}}));
    CHECK(search(0).empty());
    CHECK(search(5).empty());
}

TEST_CASE("search cap") {
    CHECK_THROWS_AS(search(1001), std::domain_error);
    CHECK_NOTHROW(search(120));
}

TEST_CASE("table rows follow the residue scheme") {
    TableRowReport r10 = table_row(10);
    CHECK(r10.params == BundleParams::validate(5, 5, 2, 2));
    CHECK(r10.from_residue_table);
    CHECK(r10.degree_col_a == 2);
    CHECK(r10.degree_col_b == 2);
    CHECK(!r10.zero_degree_caveat);

    TableRowReport r15 = table_row(15);
    CHECK(r15.params == BundleParams::validate(7, 8, 3, 3));
    CHECK(r15.degree_col_a == 4);
    CHECK(r15.degree_col_b == 3);

    TableRowReport r42 = table_row(42);
    CHECK(r42.params == BundleParams::validate(21, 21, 6, 6));
    CHECK(r42.degree_col_a == 2);
    CHECK(r42.degree_col_b == 2);
}

TEST_CASE("table rows: fallback dimensions") {
    TableRowReport r6 = table_row(6);
    CHECK(r6.params == BundleParams::validate(3, 3, 1, 1));
    CHECK(!r6.from_residue_table);
    CHECK(r6.degree_one_base);
    CHECK(r6.zero_degree_caveat);

    TableRowReport r13 = table_row(13);
    CHECK(r13.params == BundleParams::validate(6, 7, 2, 2));
    CHECK(!r13.from_residue_table);
    CHECK(r13.zero_degree_caveat);
    CHECK(r13.degree_col_a == 1);
    CHECK(r13.degree_col_b == 0);

    for (unsigned d : {0u, 1u, 5u})
        CHECK_THROWS_AS(table_row(d), std::domain_error);
    for (unsigned d : {7u, 8u, 9u})
        CHECK_THROWS_AS(table_row(d), std::domain_error);
}

TEST_CASE("total space model in dimension 8") {
    BundleParams bp = BundleParams::validate(3, 3, 1, 1);
    TotalSpaceReport r = total_space_model(bp, 896);
    CHECK(r.p_top == Rational(128));
    CHECK(r.ahat == Rational(1));
    CHECK(r.signature.is_zero());
    CHECK(r.psc_obstructed);
    CHECK(r.manifold.dimension() == 8);
    CHECK(r.manifold.number(Partition::single(2)) == Rational(128));
    CHECK(r.manifold.number(Partition(std::vector<unsigned>{1, 1})) == Rational(896));
    CHECK(signature(r.manifold).is_zero());
    CHECK(ahat_genus(r.manifold) == Rational(1));

    CHECK_THROWS_AS(total_space_model(bp, 0), std::domain_error);
}

TEST_CASE("kappa pairing scales with the input pairing") {
    BundleParams bp = BundleParams::validate(3, 3, 1, 1);
    KappaPairingReport unit = kappa_pairing(bp, 1);
    CHECK(unit.degree == 2);
    CHECK(unit.value == Rational::parse("1/896"));
    CHECK(unit.nonzero);

    KappaPairingReport scaled = kappa_pairing(bp, 896);
    CHECK(scaled.value == Rational(1));

    BundleParams wide = BundleParams::validate(7, 8, 3, 3);
    KappaPairingReport kp = kappa_pairing(wide, 1);
    CHECK(kp.degree == 9);
    CHECK(kp.nonzero);
}
