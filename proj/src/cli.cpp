#include "genera/cli.hpp"

#include "genera/bernoulli.hpp"
#include "genera/json_io.hpp"
#include "genera/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>

namespace genera {

namespace {

std::string format_polynomial(const GradedPolynomial& g) {
    std::string s;
    for (const auto& [p, c] : g.terms()) {
        std::string mono = c.abs().str() + " " + p.str();
        if (s.empty())
            s = (c.sign() < 0 ? "-" : "") + mono;
        else
            s += (c.sign() < 0 ? " - " : " + ") + mono;
    }
    return s.empty() ? "0" : s;
}

std::string format_matrix(const Matrix2& m) {
    return "[[" + m.a.str() + ", " + m.b.str() + "], [" + m.c.str() + ", " + m.d.str() + "]]";
}

std::string format_set(const std::set<unsigned>& s) {
    std::string out = "{";
    for (unsigned v : s) {
        if (out.size() > 1)
            out += ", ";
        out += std::to_string(v);
    }
    return out + "}";
}

std::string format_params(const BundleParams& bp) {
    return "p=" + std::to_string(bp.p()) + " q=" + std::to_string(bp.q()) +
           " i=" + std::to_string(bp.i()) + " j=" + std::to_string(bp.j());
}

void emit(std::ostream& out, bool as_json, const Json& j, const std::string& table) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << table;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact multiplicative-sequence and genus computations", "genera"};
    app.require_subcommand(1);

    std::string format = "table";
    bool json_flag = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--json", json_flag, "shorthand for --format json");
    auto as_json = [&] { return json_flag || format == "json"; };

    int rc = 0;

    // bernoulli
    unsigned bern_n = 0;
    bool bern_unsigned = false;
    auto* c_bern = app.add_subcommand("bernoulli", "Bernoulli number B_n (convention B_1 = -1/2)");
    c_bern->fallthrough();
    c_bern->add_option("--n", bern_n, "index n")->required();
    c_bern->add_flag("--unsigned", bern_unsigned, "print |B_n| instead");
    c_bern->callback([&] {
        Rational v = bern_unsigned ? unsigned_bernoulli(bern_n) : bernoulli(bern_n);
        Json j{{"n", bern_n}, {"unsigned", bern_unsigned}, {"value", v.str()}};
        std::string label = bern_unsigned ? "|B_" + std::to_string(bern_n) + "|" : "B_" + std::to_string(bern_n);
        emit(out, as_json(), j, label + " = " + v.str() + "\n");
    });

    // series
    std::string ser_genus;
    unsigned ser_order = 0;
    auto* c_ser = app.add_subcommand("series", "characteristic power series of a genus");
    c_ser->fallthrough();
    c_ser->add_option("--genus", ser_genus, "L or Ahat")->required()->check(CLI::IsMember({"L", "Ahat"}));
    c_ser->add_option("--order", ser_order, "truncation order")->required();
    c_ser->callback([&] {
        TruncatedSeries s = char_series(parse_genus(ser_genus), ser_order);
        Json j{{"genus", ser_genus}, {"order", ser_order}, {"coefficients", to_json(s)}};
        std::string t = "Q_" + ser_genus + "(z) up to z^" + std::to_string(ser_order) + "\n";
        for (unsigned k = 0; k <= ser_order; ++k)
            t += "  z^" + std::to_string(k) + ": " + s.coeff(k).str() + "\n";
        emit(out, as_json(), j, t);
    });

    // msequence
    std::string seq_genus;
    unsigned seq_n = 0;
    auto* c_seq = app.add_subcommand("msequence", "multiplicative sequence polynomials K_1..K_n");
    c_seq->fallthrough();
    c_seq->add_option("--genus", seq_genus, "L or Ahat")->required()->check(CLI::IsMember({"L", "Ahat"}));
    c_seq->add_option("--n", seq_n, "largest degree")->required()->check(CLI::PositiveNumber);
    c_seq->callback([&] {
        MultiplicativeSequence seq = genus_sequence(parse_genus(seq_genus), seq_n);
        Json j{{"genus", seq_genus}, {"n_max", seq_n}, {"polynomials", to_json(seq)}};
        std::string t;
        for (unsigned n = 1; n <= seq_n; ++n)
            t += "K_" + std::to_string(n) + " = " + format_polynomial(seq.polynomial(n)) + "\n";
        emit(out, as_json(), j, t);
    });

    // identity
    std::string id_genus;
    unsigned id_i = 0, id_j = 0;
    auto* c_id = app.add_subcommand("identity", "product identity s_i s_j = s_{i+j} + lambda s_{i,j}");
    c_id->fallthrough();
    c_id->add_option("--genus", id_genus, "L or Ahat")->required()->check(CLI::IsMember({"L", "Ahat"}));
    c_id->add_option("--i", id_i, "first index")->required()->check(CLI::PositiveNumber);
    c_id->add_option("--j", id_j, "second index")->required()->check(CLI::PositiveNumber);
    c_id->callback([&] {
        MultiplicativeSequence seq = genus_sequence(parse_genus(id_genus), id_i + id_j);
        ProductIdentityReport r = verify_product_identity(seq, id_i, id_j);
        Json j = to_json(r);
        j["genus"] = id_genus;
        std::string t = "genus " + id_genus + ", i=" + std::to_string(id_i) + ", j=" + std::to_string(id_j) +
                        "\n  s_i s_j   = " + r.lhs.str() + "\n  s_{i+j}   = " + r.leading.str() +
                        "\n  s_{i,j}   = " + r.mixed.str() + "\n  lambda    = " + std::to_string(r.lambda) +
                        "\n  rhs       = " + r.rhs.str() + "\n  identity holds: " + (r.holds ? "yes" : "no") +
                        "\n";
        emit(out, as_json(), j, t);
    });

    // lemma24
    unsigned cm_i = 0, cm_j = 0;
    auto* c_cm = app.add_subcommand("lemma24", "signature-zero criterion matrices and determinants");
    c_cm->fallthrough();
    c_cm->add_option("--i", cm_i, "first index")->required()->check(CLI::PositiveNumber);
    c_cm->add_option("--j", cm_j, "second index")->required()->check(CLI::PositiveNumber);
    c_cm->callback([&] {
        CriterionMatrixReport r = criterion_matrices(cm_i, cm_j);
        std::string t = "criterion matrices for i=" + std::to_string(cm_i) + ", j=" + std::to_string(cm_j) +
                        "\n  full    = " + format_matrix(r.full) + "\n  det     = " + r.full_det.str() +
                        "\n  reduced = " + format_matrix(r.reduced) + "\n  det     = " + r.reduced_det.str() +
                        "\n  nonsingular: " + (r.nonsingular ? "yes" : "no") + "\n";
        emit(out, as_json(), to_json(r), t);
    });

    // manifold
    std::string mf_file;
    auto* c_mf = app.add_subcommand("manifold", "signature and A-hat genus of a formal manifold");
    c_mf->fallthrough();
    c_mf->add_option("--file", mf_file, "JSON file with {\"dim\", \"numbers\"}")
        ->required()
        ->check(CLI::ExistingFile);
    c_mf->callback([&] {
        std::ifstream in(mf_file);
        if (!in)
            throw std::domain_error("cannot read " + mf_file);
        Json parsed;
        try {
            parsed = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw std::domain_error("invalid JSON in " + mf_file + ": " + e.what());
        }
        FormalManifold m = manifold_from_json(parsed);
        MultiplicativeSequence l = genus_sequence(GenusId::L, m.quarter_dim());
        MultiplicativeSequence a = genus_sequence(GenusId::Ahat, m.quarter_dim());
        Rational sig = genus(m, l), ah = genus(m, a);
        Json j{{"dim", m.dimension()}, {"signature", sig.str()}, {"ahat", ah.str()}};
        std::string t = "dimension " + std::to_string(m.dimension()) + " manifold\n";
        for (const auto& [p, v] : m.numbers())
            t += "  " + p.str() + ": " + v.str() + "\n";
        t += "  signature = " + sig.str() + "\n  ahat      = " + ah.str() + "\n";
        emit(out, as_json(), j, t);
    });

    // bundle-search
    unsigned bs_dim = 0;
    auto* c_bs = app.add_subcommand("bundle-search", "all admissible (p, q, i, j) with p + q = dim");
    c_bs->fallthrough();
    c_bs->add_option("--dim", bs_dim, "dimension d = p + q")->required();
    c_bs->callback([&] {
        std::vector<BundleParams> all = search(bs_dim);
        Json arr = Json::array();
        std::string t;
        for (const BundleParams& bp : all) {
            arr.push_back(to_json(bp));
            t += format_params(bp) + " | base=(" + std::to_string(bp.base_dim_a()) + ", " +
                 std::to_string(bp.base_dim_b()) + ") total_dim=" + std::to_string(bp.total_dim()) + "\n";
        }
        t += std::to_string(all.size()) + " admissible parameter set" + (all.size() == 1 ? "" : "s") +
             " in dimension " + std::to_string(bs_dim) + "\n";
        emit(out, as_json(), arr, t);
    });

    // bundle-table
    unsigned bt_dim = 0;
    auto* c_bt = app.add_subcommand("bundle-table", "preferred parameter row for a dimension");
    c_bt->fallthrough();
    c_bt->add_option("--dim", bt_dim, "dimension d = p + q")->required();
    c_bt->callback([&] {
        TableRowReport r = table_row(bt_dim);
        KappaPairingReport kp = kappa_pairing(r.params, 1);
        ClosingCheckReport cc = closing_check(r.params);
        Json j = to_json(r);
        j["closing"] = to_json(cc);
        j["kappa"] = Json{{"degree", kp.degree}, {"pipj", "1"}, {"value", kp.value.str()}, {"nonzero", kp.nonzero}};
        std::string t = "dimension " + std::to_string(bt_dim) + ": " + format_params(r.params) +
                        (r.from_residue_table ? " (residue scheme)" : " (fallback from search)") + "\n";
        t += "  base spheres: S^" + std::to_string(r.params.base_dim_a()) + " x S^" +
             std::to_string(r.params.base_dim_b()) + ", total space dimension " +
             std::to_string(r.params.total_dim()) + "\n";
        t += "  degree columns: " + std::to_string(r.degree_col_a) + ", " + std::to_string(r.degree_col_b) + "\n";
        t += "  closing bound: base " + std::to_string(cc.base_dim) + " <= " + std::to_string(cc.bound) +
             " (n=" + std::to_string(cc.n) + (cc.n_even ? " even" : " odd") + "): " +
             (cc.passes ? "ok" : "violated") + "\n";
        t += "  kappa pairing at p_i p_j = 1: degree " + std::to_string(kp.degree) + ", value " +
             kp.value.str() + "\n";
        if (r.zero_degree_caveat)
            t += "  caveat: one base sphere is 1-dimensional; only the fundamental group is detected\n";
        emit(out, as_json(), j, t);
    });

    // conclude
    unsigned cl_dim = 0;
    auto* c_cl = app.add_subcommand("conclude", "detection statement for a dimension");
    c_cl->fallthrough();
    c_cl->add_option("--dim", cl_dim, "dimension of the model manifold")->required();
    c_cl->callback([&] {
        ConclusionReport r = theorem_conclusion(cl_dim);
        std::string t = "dimension " + std::to_string(r.dim) + " (" + r.mode + " case)\n";
        t += "  parameters: " + format_params(r.row.params) + "\n";
        t += "  detected cohomology degrees: " + format_set(r.degrees.m_set) + "\n";
        t += "  detected homotopy degrees: " + format_set(r.hurewicz.j_set) +
             (r.hurewicz.pi1_possible ? " (plus a fundamental-group statement)" : "") + "\n";
        t += "  one of the following holds:\n";
        for (const std::string& alt : r.alternatives)
            t += "    - " + alt + "\n";
        for (const std::string& note : r.notes)
            t += "  note: " + note + "\n";
        if (!r.symmetric_pairs.empty()) {
            t += "  symmetric choices (p = q, i = j) detect the pairs:";
            for (const auto& s : r.symmetric_pairs)
                t += " " + format_set(s);
            t += "\n";
        }
        emit(out, as_json(), to_json(r), t);
    });

    // verify-all
    auto* c_va = app.add_subcommand("verify-all", "run the full self-check ledger");
    c_va->fallthrough();
    c_va->callback([&] {
        std::vector<VerifyCheck> checks = run_verification();
        unsigned passed = 0;
        Json arr = Json::array();
        std::string t;
        for (const VerifyCheck& c : checks) {
            passed += c.passed ? 1 : 0;
            arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            t += std::string(c.passed ? "PASS" : "FAIL") + " " + c.name +
                 (c.detail.empty() ? "" : " [" + c.detail + "]") + "\n";
        }
        t += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
        emit(out, as_json(), arr, t);
        if (passed != checks.size())
            rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

} // namespace genera
