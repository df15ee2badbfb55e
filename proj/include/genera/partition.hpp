#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace genera {

/// Integer partition with positive parts stored weakly decreasing.
/// The empty partition (weight 0) indexes the constant monomial.
///
/// Text form groups equal parts as "p<part>^<mult>" joined by '.', largest
/// part first, e.g. (2,1,1) -> "p2^1.p1^2"; the empty partition prints "1".
class Partition {
public:
    Partition() = default;
    /// Parts may be given in any order; zeros are rejected.
    explicit Partition(std::vector<unsigned> parts);
    static Partition single(unsigned k);

    unsigned weight() const { return weight_; }
    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }

    /// Multiset union with another partition.
    Partition merged(const Partition& other) const;

    std::string str() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    /// Orders by weight, then by the enumeration order below (so within one
    /// weight, (n) sorts first and (1,...,1) last).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// All partitions of n, largest-part-first order:
/// partitions(4) = (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions(unsigned n);

} // namespace genera
