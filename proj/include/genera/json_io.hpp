#pragma once

#include "genera/conclusions.hpp"

#include "json.hpp"

namespace genera {

using Json = nlohmann::ordered_json;

/// JSON wire conventions: rationals are canonical strings ("7/45", "-1/24",
/// "128"), partitions are their text keys ("p2^1.p1^2"), sets become sorted
/// arrays.  Field order is fixed so serialized output is byte-reproducible.

Json to_json(const Rational& r);
Json to_json(const TruncatedSeries& s);
Json to_json(const Partition& p);
Json to_json(const GradedPolynomial& g);
Json to_json(const MultiplicativeSequence& seq);
Json to_json(const ProductIdentityReport& r);
Json to_json(const Matrix2& m);
Json to_json(const CriterionMatrixReport& r);
Json to_json(const SignatureZeroReport& r);
Json to_json(const FormalManifold& m);
Json to_json(const BundleParams& bp);
Json to_json(const ClosingCheckReport& r);
Json to_json(const TotalSpaceReport& r);
Json to_json(const TableRowReport& r);
Json to_json(const DegreeReport& r);
Json to_json(const HurewiczReport& r);
Json to_json(const ConclusionReport& r);

template <typename T>
Json to_json(const std::vector<T>& v) {
    Json arr = Json::array();
    for (const auto& x : v)
        arr.push_back(to_json(x));
    return arr;
}

Json to_json(const std::set<unsigned>& s);

/// Reads {"dim": 4n, "numbers": {partition-key: rational-string, ...}}.
/// Throws std::domain_error on malformed shape or values.
FormalManifold manifold_from_json(const Json& j);

} // namespace genera
