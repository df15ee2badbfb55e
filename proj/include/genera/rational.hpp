#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace genera {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number.  Always stored in canonical form: lowest terms,
/// positive denominator, zero represented as 0/1.  All arithmetic is exact;
/// there is no floating point anywhere in this library.
///
/// Text form is "num/den" with the "/den" part omitted when the denominator
/// is 1, e.g. "7/45", "-1/1440", "128".
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Raw{}, -v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational reciprocal() const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const;

    /// Parses "num/den" or "num" (ASCII digits, optional leading '-').
    /// Throws std::domain_error on malformed input or zero denominator.
    static Rational parse(std::string_view text);

private:
    struct Raw {};
    Rational(Raw, boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^e for a non-negative integer exponent (0^0 = 1).
Rational pow(const Rational& base, unsigned e);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// 2^e as an exact integer.
BigInt pow2(unsigned e);

} // namespace genera
