#include "genera/partition.hpp"

#include "doctest.h"

#include <algorithm>
#include <stdexcept>

using namespace genera;

namespace {

// Independent oracle for partition counts: Euler's pentagonal number
// recurrence p(n) = sum_{k>=1} (-1)^{k-1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
std::vector<long long> pentagonal_counts(unsigned n_max) {
    std::vector<long long> p(n_max + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        long long acc = 0;
        for (unsigned k = 1;; ++k) {
            unsigned g1 = k * (3 * k - 1) / 2;
            unsigned g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n)
                break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n)
                acc += sign * p[n - g1];
            if (g2 <= n)
                acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

} // namespace

TEST_CASE("constructor normalizes and validates") {
    Partition p(std::vector<unsigned>{1, 3, 1});
    CHECK(p.parts() == std::vector<unsigned>{3, 1, 1});
    CHECK(p.weight() == 5);
    CHECK(p.length() == 3);
    CHECK_THROWS_AS(Partition(std::vector<unsigned>{2, 0}), std::domain_error);
    CHECK(Partition().empty());
    CHECK(Partition().weight() == 0);
    CHECK(Partition::single(4).parts() == std::vector<unsigned>{4});
}

TEST_CASE("enumeration order is largest part first") {
    auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<unsigned>{4});
    CHECK(p4[1].parts() == std::vector<unsigned>{3, 1});
    CHECK(p4[2].parts() == std::vector<unsigned>{2, 2});
    CHECK(p4[3].parts() == std::vector<unsigned>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<unsigned>{1, 1, 1, 1});

    auto p0 = partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
}

TEST_CASE("counts match the pentagonal recurrence up to 20") {
    auto counts = pentagonal_counts(20);
    for (unsigned n = 0; n <= 20; ++n)
        CHECK(partitions(n).size() == static_cast<std::size_t>(counts[n]));
    CHECK(counts[8] == 22); // spot value
}

TEST_CASE("ordering sorts by weight then enumeration position") {
    for (unsigned n = 2; n <= 8; ++n) {
        auto ps = partitions(n);
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            CHECK(ps[i] < ps[i + 1]);
    }
    CHECK(Partition::single(2) < Partition(std::vector<unsigned>{1, 1, 1}));
    auto shuffled = partitions(6);
    std::reverse(shuffled.begin(), shuffled.end());
    std::sort(shuffled.begin(), shuffled.end());
    CHECK(shuffled == partitions(6));
}

TEST_CASE("text form") {
    CHECK(Partition().str() == "1");
    CHECK(Partition::single(3).str() == "p3^1");
    CHECK(Partition(std::vector<unsigned>{2, 1, 1}).str() == "p2^1.p1^2");
    CHECK(Partition(std::vector<unsigned>{5, 5, 2}).str() == "p5^2.p2^1");
}

TEST_CASE("parse round trips every partition of weight <= 8") {
    for (unsigned n = 0; n <= 8; ++n)
        for (const Partition& p : partitions(n))
            CHECK(Partition::parse(p.str()) == p);
}

TEST_CASE("parse rejects malformed keys") {
    for (const char* bad : {"", "p0^1", "p1", "p1^", "p1^0", "x2^1", "p2^1.", ".p1^1", "p2^1..p1^1", "p-1^2"})
        CHECK_THROWS_AS(Partition::parse(bad), std::domain_error);
}

TEST_CASE("merged takes the multiset union") {
    Partition a(std::vector<unsigned>{2, 1});
    Partition b(std::vector<unsigned>{2, 2, 1});
    Partition m = a.merged(b);
    CHECK(m.parts() == std::vector<unsigned>{2, 2, 2, 1, 1});
    CHECK(m.weight() == a.weight() + b.weight());
    CHECK(a.merged(Partition()) == a);
}
