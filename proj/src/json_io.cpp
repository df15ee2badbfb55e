#include "genera/json_io.hpp"

#include <stdexcept>

namespace genera {

Json to_json(const Rational& r) {
    return r.str();
}

Json to_json(const TruncatedSeries& s) {
    Json arr = Json::array();
    for (const Rational& c : s.coeffs())
        arr.push_back(c.str());
    return arr;
}

Json to_json(const Partition& p) {
    return p.str();
}

Json to_json(const GradedPolynomial& g) {
    Json arr = Json::array();
    for (const auto& [p, c] : g.terms())
        arr.push_back(Json{{"partition", p.str()}, {"coefficient", c.str()}});
    return arr;
}

Json to_json(const MultiplicativeSequence& seq) {
    Json obj = Json::object();
    for (unsigned n = 1; n <= seq.n_max(); ++n)
        obj[std::to_string(n)] = to_json(seq.polynomial(n));
    return obj;
}

Json to_json(const std::set<unsigned>& s) {
    Json arr = Json::array();
    for (unsigned v : s)
        arr.push_back(v);
    return arr;
}

Json to_json(const ProductIdentityReport& r) {
    return Json{{"i", r.i},
                {"j", r.j},
                {"lambda", r.lambda},
                {"lhs", r.lhs.str()},
                {"rhs", r.rhs.str()},
                {"leading", r.leading.str()},
                {"mixed", r.mixed.str()},
                {"holds", r.holds}};
}

Json to_json(const Matrix2& m) {
    return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}

Json to_json(const CriterionMatrixReport& r) {
    return Json{{"i", r.i},
                {"j", r.j},
                {"full_matrix", to_json(r.full)},
                {"full_det", r.full_det.str()},
                {"reduced_matrix", to_json(r.reduced)},
                {"reduced_det", r.reduced_det.str()},
                {"nonsingular", r.nonsingular}};
}

Json to_json(const SignatureZeroReport& r) {
    return Json{{"i", r.i},
                {"j", r.j},
                {"pipj", r.pipj.str()},
                {"p_top", r.p_top.str()},
                {"ahat", r.ahat.str()},
                {"degenerate", r.degenerate}};
}

Json to_json(const FormalManifold& m) {
    Json numbers = Json::object();
    for (const auto& [p, v] : m.numbers())
        numbers[p.str()] = v.str();
    return Json{{"dim", m.dimension()}, {"numbers", numbers}};
}

Json to_json(const BundleParams& bp) {
    return Json{{"p", bp.p()},
                {"q", bp.q()},
                {"i", bp.i()},
                {"j", bp.j()},
                {"d", bp.fiber_dim()},
                {"a", bp.base_dim_a()},
                {"b", bp.base_dim_b()},
                {"k", bp.top_index()},
                {"total_dim", bp.total_dim()},
                {"kappa_degree", bp.kappa_degree()},
                {"degree_one_base", bp.degree_one_base()},
                {"spin_fiber_ok", bp.spin_fiber_ok()}};
}

Json to_json(const ClosingCheckReport& r) {
    return Json{{"n", r.n},
                {"parity", r.n_even ? "even" : "odd"},
                {"bound", r.bound},
                {"base_dim", r.base_dim},
                {"passes", r.passes}};
}

Json to_json(const TotalSpaceReport& r) {
    return Json{{"params", to_json(r.params)},
                {"pipj", r.pipj.str()},
                {"p_top", r.p_top.str()},
                {"signature", r.signature.str()},
                {"ahat", r.ahat.str()},
                {"psc_obstructed", r.psc_obstructed},
                {"manifold", to_json(r.manifold)}};
}

Json to_json(const TableRowReport& r) {
    return Json{{"d", r.d},
                {"params", to_json(r.params)},
                {"from_residue_table", r.from_residue_table},
                {"degree_columns", Json::array({r.degree_col_a, r.degree_col_b})},
                {"degree_one_base", r.degree_one_base},
                {"zero_degree_caveat", r.zero_degree_caveat}};
}

Json to_json(const DegreeReport& r) {
    return Json{{"base", Json::array({r.base_a, r.base_b})},
                {"kappa_degree", r.kappa_degree},
                {"base_cohomology", to_json(r.base_cohomology)},
                {"m_set", to_json(r.m_set)},
                {"pi1_flag", r.pi1_flag}};
}

Json to_json(const HurewiczReport& r) {
    return Json{{"degrees", to_json(r.degrees)},
                {"pi1_possible", r.pi1_possible},
                {"threshold", r.threshold},
                {"j_set", to_json(r.j_set)}};
}

Json to_json(const ConclusionReport& r) {
    Json j{{"dim", r.dim},
           {"mode", r.mode},
           {"params", to_json(r.row.params)},
           {"from_residue_table", r.row.from_residue_table},
           {"m_set", to_json(r.degrees.m_set)},
           {"pi1_possible", r.hurewicz.pi1_possible},
           {"j_set", to_json(r.hurewicz.j_set)},
           {"alternatives", r.alternatives}};
    if (!r.notes.empty())
        j["notes"] = r.notes;
    if (!r.symmetric_pairs.empty()) {
        Json pairs = Json::array();
        for (const auto& s : r.symmetric_pairs)
            pairs.push_back(to_json(s));
        j["symmetric_pairs"] = pairs;
    }
    return j;
}

FormalManifold manifold_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("numbers"))
        throw std::domain_error("manifold: expected {\"dim\": ..., \"numbers\": {...}}");
    if (!j["dim"].is_number_unsigned())
        throw std::domain_error("manifold: dim must be a non-negative integer");
    unsigned dim = j["dim"].get<unsigned>();
    if (dim == 0 || dim % 4 != 0)
        throw std::domain_error("manifold: dim must be a positive multiple of 4");
    if (!j["numbers"].is_object())
        throw std::domain_error("manifold: numbers must be an object");
    std::map<Partition, Rational> numbers;
    for (const auto& [key, value] : j["numbers"].items()) {
        if (!value.is_string())
            throw std::domain_error("manifold: Pontryagin numbers must be rational strings");
        numbers[Partition::parse(key)] = Rational::parse(value.get<std::string>());
    }
    return FormalManifold(dim / 4, std::move(numbers));
}

} // namespace genera
