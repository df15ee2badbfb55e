#pragma once

#include "genera/rational.hpp"

#include <vector>

namespace genera {

/// Signed Bernoulli number B_n in the convention B_1 = -1/2.
/// B_0 = 1, B_2 = 1/6, B_4 = -1/30, B_6 = 1/42, ... and B_odd = 0 for n >= 3.
Rational bernoulli(unsigned n);

/// B_0, ..., B_n as a vector (same convention as bernoulli()).
std::vector<Rational> bernoulli_upto(unsigned n);

/// |B_n|.  The classical genus formulas use the unsigned value of B_{2k},
/// so callers normally pass an even index.
Rational unsigned_bernoulli(unsigned n);

} // namespace genera
