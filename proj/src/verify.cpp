#include "genera/verify.hpp"

#include "genera/bernoulli.hpp"
#include "genera/conclusions.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace genera {

namespace {

Rational random_rational(std::mt19937& gen, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 30);
    int n = num(gen);
    if (nonzero && n == 0)
        n = 1;
    return Rational(BigInt(n), BigInt(den(gen)));
}

// Classical recurrence sum_{m=0}^{n} C(n+1, m) B_m = 0, solved for B_n.
// Independent of the Akiyama-Tanigawa route used by bernoulli().
std::vector<Rational> bernoulli_by_recurrence(unsigned n) {
    std::vector<Rational> b{Rational(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * b[k];
        b.push_back(-acc / Rational(BigInt(m) + 1));
    }
    return b;
}

struct Ledger {
    std::vector<VerifyCheck> checks;

    void run(const std::string& name, const std::function<std::string()>& body) {
        VerifyCheck c{name, false, ""};
        try {
            c.detail = body(); // empty string means pass
            c.passed = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        checks.push_back(std::move(c));
    }
};

std::string check_bernoulli() {
    auto direct = bernoulli_by_recurrence(30);
    auto engine = bernoulli_upto(30);
    for (unsigned n = 0; n <= 30; ++n)
        if (direct[n] != engine[n])
            return "mismatch at n=" + std::to_string(n) + ": " + engine[n].str() + " vs " + direct[n].str();
    if (bernoulli(1) != Rational(-1, 2))
        return "B_1 must be -1/2";
    return "";
}

std::string check_char_series() {
    const char* l_expect[] = {"1", "1/3", "-1/45", "2/945"};
    const char* a_expect[] = {"1", "-1/24", "7/5760", "-31/967680"};
    TruncatedSeries l = char_series(GenusId::L, 3);
    TruncatedSeries a = char_series(GenusId::Ahat, 3);
    for (unsigned k = 0; k <= 3; ++k) {
        if (l.coeff(k) != Rational::parse(l_expect[k]))
            return "L series z^" + std::to_string(k) + " = " + l.coeff(k).str();
        if (a.coeff(k) != Rational::parse(a_expect[k]))
            return "Ahat series z^" + std::to_string(k) + " = " + a.coeff(k).str();
    }
    return "";
}

std::string check_series_roundtrips() {
    std::mt19937 gen(20240601);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> c(11);
        c[0] = 1;
        for (unsigned k = 1; k <= 10; ++k)
            c[k] = random_rational(gen);
        TruncatedSeries s(c);
        if (!(s * s.reciprocal() == TruncatedSeries::one(10)))
            return "s * 1/s != 1 on trial " + std::to_string(trial);
        if (!(s.log().exp() == s))
            return "exp(log(s)) != s on trial " + std::to_string(trial);
    }
    return "";
}

std::string check_closed_forms() {
    MultiplicativeSequence l = genus_sequence(GenusId::L, 8);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, 8);
    for (unsigned k = 1; k <= 8; ++k) {
        if (l.leading_coefficient(k) != closed_form_leading(GenusId::L, k))
            return "s_" + std::to_string(k) + " != closed form";
        if (a.leading_coefficient(k) != closed_form_leading(GenusId::Ahat, k))
            return "a_" + std::to_string(k) + " != closed form";
    }
    return "";
}

std::string check_product_identities() {
    MultiplicativeSequence l = genus_sequence(GenusId::L, 10);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, 10);
    for (unsigned i = 1; i <= 9; ++i)
        for (unsigned j = i; i + j <= 10; ++j) {
            if (!verify_product_identity(l, i, j).holds)
                return "L identity fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (!verify_product_identity(a, i, j).holds)
                return "Ahat identity fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
    return "";
}

std::string check_criterion_matrices() {
    MultiplicativeSequence l = genus_sequence(GenusId::L, 16);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, 16);
    for (unsigned i = 1; i <= 8; ++i)
        for (unsigned j = 1; j <= 8; ++j) {
            CriterionMatrixReport r = criterion_matrices(i, j, l, a);
            Rational expect = Rational(-1, 4) * Rational((pow2(2 * i) - 1) * (pow2(2 * j) - 1));
            if (r.reduced_det != expect)
                return "reduced determinant off at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (!r.nonsingular)
                return "singular full matrix at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        }
    return "";
}

std::string check_signature_zero() {
    MultiplicativeSequence l = genus_sequence(GenusId::L, 12);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, 12);
    std::mt19937 gen(20240602);
    for (unsigned i = 1; i <= 6; ++i)
        for (unsigned j = i; j <= 6; ++j)
            for (int trial = 0; trial < 5; ++trial) {
                Rational v = random_rational(gen, true);
                SignatureZeroReport r = ahat_under_zero_signature(i, j, v, l, a);
                std::map<Partition, Rational> numbers;
                numbers[Partition(std::vector<unsigned>{i, j})] = v;
                numbers[Partition::single(i + j)] = r.p_top;
                FormalManifold m(i + j, std::move(numbers));
                if (!genus(m, l).is_zero())
                    return "signature not killed at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                if (genus(m, a) != r.ahat)
                    return "ahat mismatch at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                if (r.ahat.is_zero())
                    return "ahat unexpectedly zero at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            }
    // the worked example: dimension 8, p_1 p_1 = 896 forces p_2 = 128, ahat = 1
    SignatureZeroReport ex = ahat_under_zero_signature(1, 1, 896, l, a);
    if (ex.p_top != Rational(128) || ex.ahat != Rational(1))
        return "worked example (1, 1, 896) gives p_top=" + ex.p_top.str() + ", ahat=" + ex.ahat.str();
    return "";
}

GradedVector random_total_class(std::mt19937& gen, unsigned cap) {
    GradedVector v = graded_one(cap);
    for (unsigned w = 1; w <= cap; ++w)
        for (const Partition& p : partitions(w))
            v[w].add_term(p, random_rational(gen));
    return v;
}

std::string check_multiplicativity() {
    const unsigned cap = 5;
    MultiplicativeSequence l = genus_sequence(GenusId::L, cap);
    MultiplicativeSequence a = genus_sequence(GenusId::Ahat, cap);
    std::mt19937 gen(20240603);
    for (int trial = 0; trial < 10; ++trial) {
        GradedVector x = random_total_class(gen, cap);
        GradedVector y = random_total_class(gen, cap);
        GradedVector xy = graded_multiply(x, y, cap);
        for (const auto* seq : {&l, &a}) {
            GradedVector lhs = seq->apply(xy, cap);
            GradedVector rhs = graded_multiply(seq->apply(x, cap), seq->apply(y, cap), cap);
            for (unsigned w = 0; w <= cap; ++w)
                if (!(lhs[w] == rhs[w]))
                    return "K(ab) != K(a)K(b) in weight " + std::to_string(w) + " on trial " +
                           std::to_string(trial);
        }
    }
    return "";
}

std::string check_table_rows() {
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned r = 2; r <= 9; ++r) {
            unsigned d = 8 * k + r;
            TableRowReport row = table_row(d);
            if (d == 13) {
                if (row.from_residue_table || !row.zero_degree_caveat)
                    return "dimension 13 must fall back with a caveat";
                if (!(row.params == BundleParams::validate(6, 7, 2, 2)))
                    return "dimension 13 fallback parameters wrong";
                continue;
            }
            if (!row.from_residue_table)
                return "dimension " + std::to_string(d) + " should come from the residue scheme";
            if (row.params.fiber_dim() != d)
                return "dimension mismatch at d=" + std::to_string(d);
            static const unsigned cols[8][2] = {{3, 3}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 4}, {4, 4}, {4, 3}};
            // index by d mod 8: r=0 -> (3,3), r=1 -> (3,2), r=2 -> (2,2), ...
            const unsigned* expect = cols[d % 8];
            if (row.degree_col_a != expect[0] || row.degree_col_b != expect[1])
                return "degree columns wrong at d=" + std::to_string(d);
            if (!closing_check(row.params).passes)
                return "closing bound fails at d=" + std::to_string(d);
        }
    return "";
}

std::string check_homotopy_sets() {
    static const unsigned expected[8][5] = {
        // j-sets per residue d mod 8 (terminated by 0): see table below
        {2, 3, 7, 0, 0},    // r=0
        {2, 3, 6, 0, 0},    // r=1
        {2, 5, 0, 0, 0},    // r=2
        {2, 4, 0, 0, 0},    // r=3
        {3, 0, 0, 0, 0},    // r=4
        {2, 3, 4, 6, 0},    // r=5
        {2, 3, 4, 9, 0},    // r=6
        {2, 3, 4, 8, 0},    // r=7
    };
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned r = 2; r <= 9; ++r) {
            unsigned d = 8 * k + r;
            if (d == 13)
                continue; // fallback row, checked separately
            std::set<unsigned> want;
            for (unsigned v : expected[d % 8])
                if (v != 0)
                    want.insert(v);
            HurewiczReport h = hurewicz_homotopy_set(degree_report(table_row(d).params).m_set);
            if (h.j_set != want)
                return "j-set wrong at d=" + std::to_string(d);
        }
    if (hurewicz_homotopy_set(degree_report(table_row(13).params).m_set).j_set != std::set<unsigned>{2})
        return "dimension 13 must detect pi_2";
    return "";
}

std::string check_dim42_pairs() {
    std::vector<std::set<unsigned>> expected = {{2, 5}, {6, 13}, {10, 21}, {14, 29}, {18, 37}};
    std::vector<std::set<unsigned>> got;
    for (const BundleParams& bp : search(42))
        if (bp.p() == bp.q() && bp.i() == bp.j())
            got.push_back(degree_report(bp).m_set);
    if (got != expected)
        return "symmetric detection pairs in dimension 42 are off (" + std::to_string(got.size()) + " found)";
    return "";
}

std::string check_search_scan() {
    for (unsigned d = 1; d <= 60; ++d) {
        std::vector<BundleParams> all = search(d);
        bool should_be_empty = (d < 6) || (d >= 7 && d <= 9);
        if (should_be_empty != all.empty())
            return "emptiness pattern wrong at d=" + std::to_string(d);
        bool wide_base = false;
        for (const BundleParams& bp : all) {
            if (!closing_check(bp).passes)
                return "closing bound fails for a search result at d=" + std::to_string(d);
            if (!bp.spin_fiber_ok())
                return "search admitted p or q below 3 at d=" + std::to_string(d);
            if (!bp.degree_one_base())
                wide_base = true;
        }
        if (d >= 10 && d != 13 && !wide_base)
            return "no choice with both base spheres of dimension >= 2 at d=" + std::to_string(d);
        if ((d == 6 || d == 13) && wide_base)
            return "dimension " + std::to_string(d) + " should only have degree-one-base choices";
    }
    return "";
}

} // namespace

std::vector<VerifyCheck> run_verification() {
    Ledger ledger;
    ledger.run("bernoulli numbers against the defining recurrence (n <= 30)", check_bernoulli);
    ledger.run("characteristic series coefficients (orders 0..3)", check_char_series);
    ledger.run("series reciprocal and log/exp round trips (order 10)", check_series_roundtrips);
    ledger.run("leading coefficients against Bernoulli closed forms (k <= 8)", check_closed_forms);
    ledger.run("product identities s_i s_j = s_{i+j} + lambda s_{i,j} (i + j <= 10)", check_product_identities);
    ledger.run("criterion matrices determinant formula and nonsingularity (i, j <= 8)", check_criterion_matrices);
    ledger.run("signature-zero solver against direct genus evaluation (i <= j <= 6)", check_signature_zero);
    ledger.run("multiplicativity K(ab) = K(a) K(b) on random classes (weight <= 5)", check_multiplicativity);
    ledger.run("parameter table rows for d = 8k+2 .. 8k+9, k <= 5", check_table_rows);
    ledger.run("homotopy detection j-sets per residue class (k <= 5)", check_homotopy_sets);
    ledger.run("dimension 42 symmetric detection pairs", check_dim42_pairs);
    ledger.run("parameter search scan d <= 60: closing bounds and emptiness", check_search_scan);
    return ledger.checks;
}

} // namespace genera
