#include "genera/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace genera {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        throw std::domain_error("rational: zero denominator");
    BigInt n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    v_ = boost::multiprecision::cpp_rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("rational: zero has no reciprocal");
    return Rational(Raw{}, 1 / v_);
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return std::domain_error("rational: malformed value '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty())
            throw bad();
        std::size_t i = 0;
        if (part[0] == '-')
            i = 1;
        if (i == part.size())
            throw bad();
        for (std::size_t k = i; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw bad();
        return BigInt(std::string(part));
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den.is_zero())
        throw std::domain_error("rational: zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& base, unsigned e) {
    Rational acc = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1u)
            acc *= b;
        e >>= 1u;
        if (e > 0)
            b *= b;
    }
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= (n - i);
        c /= (i + 1);
    }
    return c;
}

BigInt pow2(unsigned e) {
    return BigInt(1) << e;
}

} // namespace genera
