#include "genera/graded.hpp"

#include <stdexcept>

namespace genera {

GradedPolynomial GradedPolynomial::monomial(const Partition& p, const Rational& c) {
    GradedPolynomial g(p.weight());
    g.add_term(p, c);
    return g;
}

GradedPolynomial GradedPolynomial::one() {
    return monomial(Partition(), 1);
}

Rational GradedPolynomial::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational() : it->second;
}

void GradedPolynomial::add_term(const Partition& p, const Rational& c) {
    if (p.weight() != weight_)
        throw std::domain_error("graded: monomial weight does not match polynomial weight");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    if (weight_ != o.weight_)
        throw std::domain_error("graded: cannot add polynomials of different weights");
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    if (weight_ != o.weight_)
        throw std::domain_error("graded: cannot subtract polynomials of different weights");
    for (const auto& [p, c] : o.terms_)
        add_term(p, -c);
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial r(a.weight_ + b.weight_);
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_)
            r.add_term(pa.merged(pb), ca * cb);
    return r;
}

GradedPolynomial operator*(const Rational& s, const GradedPolynomial& a) {
    GradedPolynomial r(a.weight_);
    if (s.is_zero())
        return r;
    for (const auto& [p, c] : a.terms_)
        r.add_term(p, s * c);
    return r;
}

Rational GradedPolynomial::evaluate(const std::vector<Rational>& values) const {
    Rational total;
    for (const auto& [p, c] : terms_) {
        Rational m = c;
        for (unsigned part : p.parts()) {
            if (part >= values.size()) {
                m = Rational();
                break;
            }
            m *= values[part];
        }
        total += m;
    }
    return total;
}

GradedPolynomial power_sum_in_elementary(unsigned m) {
    return power_sums_in_elementary(m)[m];
}

std::vector<GradedPolynomial> power_sums_in_elementary(unsigned cap) {
    // Newton's identity: pw_m = e_1 pw_{m-1} - e_2 pw_{m-2} + ...
    //                           + (-1)^m e_{m-1} pw_1 + (-1)^{m-1} m e_m,
    // with e_k written as the variable p_k.
    std::vector<GradedPolynomial> pw;
    pw.reserve(cap + 1);
    pw.emplace_back(0u); // unused weight-0 slot
    for (unsigned m = 1; m <= cap; ++m) {
        GradedPolynomial acc(m);
        Rational s = 1;
        for (unsigned k = 1; k < m; ++k) {
            acc += s * (GradedPolynomial::monomial(Partition::single(k), 1) * pw[m - k]);
            s = -s;
        }
        acc += GradedPolynomial::monomial(Partition::single(m), s * Rational(m));
        pw.push_back(std::move(acc));
    }
    return pw;
}

GradedVector graded_zero(unsigned cap) {
    GradedVector v;
    v.reserve(cap + 1);
    for (unsigned w = 0; w <= cap; ++w)
        v.emplace_back(w);
    return v;
}

GradedVector graded_one(unsigned cap) {
    GradedVector v = graded_zero(cap);
    v[0] = GradedPolynomial::one();
    return v;
}

GradedVector graded_add(const GradedVector& a, const GradedVector& b) {
    unsigned cap = static_cast<unsigned>(std::min(a.size(), b.size())) - 1;
    GradedVector r = graded_zero(cap);
    for (unsigned w = 0; w <= cap; ++w)
        r[w] = a[w] + b[w];
    return r;
}

GradedVector graded_multiply(const GradedVector& a, const GradedVector& b, unsigned cap) {
    GradedVector r = graded_zero(cap);
    for (unsigned u = 0; u < a.size() && u <= cap; ++u) {
        if (a[u].is_zero())
            continue;
        for (unsigned v = 0; v < b.size() && u + v <= cap; ++v) {
            if (b[v].is_zero())
                continue;
            r[u + v] += a[u] * b[v];
        }
    }
    return r;
}

GradedVector graded_exp(const GradedVector& a, unsigned cap) {
    if (!a.empty() && !a[0].is_zero())
        throw std::domain_error("graded: exp requires zero constant term");
    GradedVector result = graded_one(cap);
    GradedVector term = graded_one(cap); // a^k / k!
    for (unsigned k = 1; k <= cap; ++k) {
        term = graded_multiply(term, a, cap);
        for (auto& comp : term)
            comp = Rational(1, BigInt(k)) * comp;
        result = graded_add(result, term);
    }
    return result;
}

} // namespace genera
