#include <pybind11/pybind11.h>

#include "genera/bernoulli.hpp"
#include "genera/json_io.hpp"
#include "genera/verify.hpp"

#include <string>

namespace py = pybind11;
using namespace genera;

namespace {

// Reports already have stable JSON forms; reuse them for the python side
// instead of hand-building nested dicts.
py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

FormalManifold manifold_from_dict(unsigned dim, const py::dict& numbers) {
    Json j{{"dim", dim}, {"numbers", Json::object()}};
    for (const auto& item : numbers)
        j["numbers"][py::cast<std::string>(item.first)] = py::cast<std::string>(item.second);
    return manifold_from_json(j);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact multiplicative-sequence and genus computations (C++ core)";

    m.def("bernoulli", [](unsigned n) { return bernoulli(n).str(); },
          py::arg("n"), "Bernoulli number B_n as a rational string (B_1 = -1/2)");
    m.def("unsigned_bernoulli", [](unsigned n) { return unsigned_bernoulli(n).str(); },
          py::arg("n"), "|B_n| as a rational string");

    m.def("char_series", [](const std::string& genus, unsigned order) {
        TruncatedSeries s = char_series(parse_genus(genus), order);
        py::list out;
        for (const Rational& c : s.coeffs())
            out.append(c.str());
        return out;
    }, py::arg("genus"), py::arg("order"), "coefficients of the characteristic series up to z^order");

    m.def("msequence", [](const std::string& genus, unsigned n) {
        return to_py(to_json(genus_sequence(parse_genus(genus), n)));
    }, py::arg("genus"), py::arg("n"), "polynomials K_1..K_n keyed by degree");

    m.def("leading_coefficient", [](const std::string& genus, unsigned k) {
        return genus_sequence(parse_genus(genus), k).leading_coefficient(k).str();
    }, py::arg("genus"), py::arg("k"), "coefficient of p_k in K_k");

    m.def("mixed_coefficient", [](const std::string& genus, unsigned i, unsigned j) {
        return genus_sequence(parse_genus(genus), i + j).mixed_coefficient(i, j).str();
    }, py::arg("genus"), py::arg("i"), py::arg("j"), "coefficient of p_i p_j in K_{i+j}");

    m.def("closed_form_leading", [](const std::string& genus, unsigned k) {
        return closed_form_leading(parse_genus(genus), k).str();
    }, py::arg("genus"), py::arg("k"), "Bernoulli closed form of the leading coefficient");

    m.def("product_identity", [](const std::string& genus, unsigned i, unsigned j) {
        return to_py(to_json(verify_product_identity(genus_sequence(parse_genus(genus), i + j), i, j)));
    }, py::arg("genus"), py::arg("i"), py::arg("j"), "s_i s_j = s_{i+j} + lambda s_{i,j} check");

    m.def("criterion_matrices", [](unsigned i, unsigned j) {
        return to_py(to_json(criterion_matrices(i, j)));
    }, py::arg("i"), py::arg("j"), "full and reduced signature-zero criterion matrices");

    m.def("signature_zero", [](unsigned i, unsigned j, const std::string& pipj) {
        return to_py(to_json(ahat_under_zero_signature(i, j, Rational::parse(pipj))));
    }, py::arg("i"), py::arg("j"), py::arg("pipj"),
       "p_{i+j} forced by signature 0 and the resulting A-hat genus");

    m.def("manifold_report", [](unsigned dim, const py::dict& numbers) {
        FormalManifold mf = manifold_from_dict(dim, numbers);
        Rational sig = genus(mf, genus_sequence(GenusId::L, mf.quarter_dim()));
        Rational ah = genus(mf, genus_sequence(GenusId::Ahat, mf.quarter_dim()));
        return to_py(Json{{"dim", mf.dimension()}, {"signature", sig.str()}, {"ahat", ah.str()}});
    }, py::arg("dim"), py::arg("numbers"),
       "signature and A-hat genus of a formal manifold given as {partition-key: rational}");

    m.def("genus_value", [](unsigned dim, const py::dict& numbers, const std::string& genus_id) {
        FormalManifold mf = manifold_from_dict(dim, numbers);
        return genus(mf, genus_sequence(parse_genus(genus_id), mf.quarter_dim())).str();
    }, py::arg("dim"), py::arg("numbers"), py::arg("genus"), "genus of a formal manifold");

    m.def("validate_bundle", [](unsigned p, unsigned q, unsigned i, unsigned j) {
        return to_py(to_json(BundleParams::validate(p, q, i, j)));
    }, py::arg("p"), py::arg("q"), py::arg("i"), py::arg("j"),
       "admissibility check; raises ValueError naming the violated inequality");

    m.def("closing_check", [](unsigned p, unsigned q, unsigned i, unsigned j) {
        return to_py(to_json(closing_check(BundleParams::validate(p, q, i, j))));
    }, py::arg("p"), py::arg("q"), py::arg("i"), py::arg("j"), "surgery bound for closing the model");

    m.def("total_space", [](unsigned p, unsigned q, unsigned i, unsigned j, const std::string& pipj) {
        return to_py(to_json(total_space_model(BundleParams::validate(p, q, i, j), Rational::parse(pipj))));
    }, py::arg("p"), py::arg("q"), py::arg("i"), py::arg("j"), py::arg("pipj") = "1",
       "signature-zero total space model and its A-hat genus");

    m.def("kappa_pairing", [](unsigned p, unsigned q, unsigned i, unsigned j, const std::string& pipj) {
        KappaPairingReport kp = kappa_pairing(BundleParams::validate(p, q, i, j), Rational::parse(pipj));
        return to_py(Json{{"degree", kp.degree}, {"pipj", pipj}, {"value", kp.value.str()}, {"nonzero", kp.nonzero}});
    }, py::arg("p"), py::arg("q"), py::arg("i"), py::arg("j"), py::arg("pipj") = "1",
       "index pairing in degree 4(i+j) - p - q");

    m.def("bundle_search", [](unsigned d) { return to_py(to_json(search(d))); },
          py::arg("d"), "all admissible (p, q, i, j) with p + q = d");

    m.def("bundle_table", [](unsigned d) { return to_py(to_json(table_row(d))); },
          py::arg("d"), "preferred parameter row for dimension d");

    m.def("conclude", [](unsigned d) { return to_py(to_json(theorem_conclusion(d))); },
          py::arg("d"), "detection statement for dimension d");

    m.def("verify_all", [] {
        Json arr = Json::array();
        for (const VerifyCheck& c : run_verification())
            arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return to_py(arr);
    }, "run the full self-check ledger");
}
