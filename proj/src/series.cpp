#include "genera/series.hpp"

#include <stdexcept>

namespace genera {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        throw std::domain_error("series: needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(unsigned order) {
    return TruncatedSeries(std::vector<Rational>(order + 1));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
    auto s = zero(order);
    s.c_[0] = 1;
    return s;
}

const Rational& TruncatedSeries::coeff(unsigned k) const {
    if (k >= c_.size())
        throw std::out_of_range("series: coefficient index exceeds order");
    return c_[k];
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[k] = a.c_[k] + b.c_[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        c[k] = a.c_[k] - b.c_[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= n; ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c)
        x *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (c_[0] != Rational(1))
        throw std::domain_error("series: reciprocal requires constant term 1");
    unsigned n = order();
    std::vector<Rational> r(n + 1);
    r[0] = 1;
    // r[k] = -sum_{i=1..k} c[i] r[k-i]
    for (unsigned k = 1; k <= n; ++k) {
        Rational acc;
        for (unsigned i = 1; i <= k; ++i)
            acc += c_[i] * r[k - i];
        r[k] = -acc;
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries TruncatedSeries::log() const {
    if (c_[0] != Rational(1))
        throw std::domain_error("series: log requires constant term 1");
    unsigned n = order();
    // log(1+u) with u = this - 1, via the derivative identity
    // (log f)' = f'/f:  k l[k] = k c[k] - sum_{i=1..k-1} i l[i] c[k-i].
    std::vector<Rational> l(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        Rational acc = Rational(k) * c_[k];
        for (unsigned i = 1; i < k; ++i)
            acc -= Rational(i) * l[i] * c_[k - i];
        l[k] = acc / Rational(k);
    }
    return TruncatedSeries(std::move(l));
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!c_[0].is_zero())
        throw std::domain_error("series: exp requires constant term 0");
    unsigned n = order();
    // (exp f)' = f' exp f:  k e[k] = sum_{i=1..k} i c[i] e[k-i].
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        Rational acc;
        for (unsigned i = 1; i <= k; ++i)
            acc += Rational(i) * c_[i] * e[k - i];
        e[k] = acc / Rational(k);
    }
    return TruncatedSeries(std::move(e));
}

const char* genus_name(GenusId id) {
    return id == GenusId::L ? "L" : "Ahat";
}

GenusId parse_genus(const std::string& name) {
    if (name == "L")
        return GenusId::L;
    if (name == "Ahat")
        return GenusId::Ahat;
    throw std::domain_error("unknown genus '" + name + "' (expected L or Ahat)");
}

namespace {

// cosh(t) in z = t^2:  sum z^m / (2m)!.
TruncatedSeries cosh_series(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned m = 0; m <= order; ++m)
        c[m] = Rational(1, factorial(2 * m));
    return TruncatedSeries(std::move(c));
}

// sinh(t)/t in z = t^2:  sum z^m / (2m+1)!.
TruncatedSeries sinh_over_t_series(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned m = 0; m <= order; ++m)
        c[m] = Rational(1, factorial(2 * m + 1));
    return TruncatedSeries(std::move(c));
}

// sinh(t/2)/(t/2) in z = t^2:  sum z^m / (4^m (2m+1)!).
TruncatedSeries sinh_half_series(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (unsigned m = 0; m <= order; ++m)
        c[m] = Rational(1, pow2(2 * m) * factorial(2 * m + 1));
    return TruncatedSeries(std::move(c));
}

} // namespace

TruncatedSeries char_series(GenusId id, unsigned order) {
    if (id == GenusId::L) {
        // sqrt(z)/tanh(sqrt(z)) = cosh(t) * t/sinh(t) with t = sqrt(z).
        return cosh_series(order) * sinh_over_t_series(order).reciprocal();
    }
    return sinh_half_series(order).reciprocal();
}

} // namespace genera
