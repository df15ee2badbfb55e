#include "genera/bernoulli.hpp"

namespace genera {

// Akiyama-Tanigawa transform.  Row m of the triangle starts from 1/(m+1);
// after the in-place update the leading entry equals B_m, except that the
// algorithm natively produces B_1 = +1/2, which we flip to match the
// B_1 = -1/2 convention used everywhere else in this library.
std::vector<Rational> bernoulli_upto(unsigned n) {
    std::vector<Rational> out;
    out.reserve(n + 1);
    std::vector<Rational> row(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        row[m] = Rational(1, BigInt(m) + 1);
        for (unsigned j = m; j >= 1; --j)
            row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        out.push_back(m == 1 ? -row[0] : row[0]);
    }
    return out;
}

Rational bernoulli(unsigned n) {
    return bernoulli_upto(n).back();
}

Rational unsigned_bernoulli(unsigned n) {
    return bernoulli(n).abs();
}

} // namespace genera
