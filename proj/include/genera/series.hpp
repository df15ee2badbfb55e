#pragma once

#include "genera/rational.hpp"

#include <vector>

namespace genera {

/// Truncated formal power series over the rationals: coefficients of
/// z^0 ... z^order, all arithmetic exact.  Binary operations truncate to the
/// smaller order of the two operands.
class TruncatedSeries {
public:
    /// coeffs[k] is the coefficient of z^k; coeffs.size() determines the order.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries zero(unsigned order);
    static TruncatedSeries one(unsigned order);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Rational& coeff(unsigned k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Cauchy product, truncated to min(order a, order b).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);

    /// 1/this; requires constant term 1 (throws std::domain_error otherwise).
    TruncatedSeries reciprocal() const;
    /// log(this); requires constant term 1.
    TruncatedSeries log() const;
    /// exp(this); requires constant term 0.
    TruncatedSeries exp() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_;
};

/// The two genera handled by this library: the signature (L) genus and the
/// A-hat genus.
enum class GenusId { L, Ahat };

/// Short lowercase name used in CLI arguments and JSON ("L" / "Ahat").
const char* genus_name(GenusId id);
GenusId parse_genus(const std::string& name);

/// Characteristic power series Q(z) of the genus, truncated at z^order:
///   L:    sqrt(z)/tanh(sqrt(z))        = 1 + z/3 - z^2/45 + 2 z^3/945 - ...
///   Ahat: (sqrt(z)/2)/sinh(sqrt(z)/2)  = 1 - z/24 + 7 z^2/5760 - ...
/// Both are built from factorial series only (no closed-form shortcuts), so
/// tests can cross-check the printed coefficients independently.
TruncatedSeries char_series(GenusId id, unsigned order);

} // namespace genera
