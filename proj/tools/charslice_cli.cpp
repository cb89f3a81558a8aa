// Command-line front end: knot-data ingestion and the computation verbs
// (alexander, homology, dihedral, phi, riley, pretzel, verify).
// Exit codes: 0 success, 1 verification/assertion failure, 2 input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "charslice/exactlin.hpp"
#include "charslice/json_io.hpp"
#include "charslice/pretzel.hpp"
#include "charslice/reps.hpp"
#include "charslice/twobridge.hpp"

using namespace charslice;
using io::Json;

namespace {

struct Options {
    std::string input;
    std::string rep_file;
    std::string json_out;
    int n = 2;
    std::optional<int> k;
    bool unbranched = false;
    double tol = sl2::kEpsRel;
};

reps::Tolerances tolerances(const Options& opt) {
    reps::Tolerances t;
    t.eps_rel = opt.tol;
    t.eps_det = opt.tol / 10.0;
    return t;
}

void emit(const Options& opt, const Json& j) {
    if (!opt.json_out.empty()) io::write_json_file(opt.json_out, j);
}

io::KnotData load_lin(const std::string& path) {
    io::KnotData data = io::load_knot_data(path);
    if (data.kind != io::KnotData::Kind::lin)
        throw ArgumentError("this command needs Lin-type knot data (Seifert matrix form)");
    return data;
}

int run_alexander(const Options& opt) {
    io::KnotData data = load_lin(opt.input);
    auto [v, u] = presentation::derive_vu(data.lin);
    exactlin::LaurentPoly delta = exactlin::alexander_polynomial(v, u);
    exactlin::LaurentPoly normalized = delta.normalized();
    std::cout << "Delta(t) = " << delta.to_string() << "\n";
    std::cout << "normalized = " << normalized.to_string() << "\n";
    std::cout << "Delta(-1) = " << delta.evaluate_int(-1) << "\n";
    std::cout << "Delta(1) = " << delta.evaluate_int(1) << "\n";

    Json j;
    j["raw"] = delta.to_string();
    j["normalized"] = normalized.to_string();
    j["at_minus_1"] = delta.evaluate_int(-1).str();
    j["at_1"] = delta.evaluate_int(1).str();
    emit(opt, j);
    return 0;
}

int run_homology(const Options& opt) {
    io::KnotData data = load_lin(opt.input);
    auto [v, u] = presentation::derive_vu(data.lin);
    exactlin::AbelianInvariants inv =
        opt.unbranched ? exactlin::cyclic_cover_homology(v, u, opt.n)
                       : exactlin::branched_cover_homology(v, u, opt.n);
    std::string space = opt.unbranched ? "C" : "Sigma";
    std::cout << "H1(" << space << "_" << opt.n << ") = " << inv.to_string() << "\n";

    Json j;
    j["space"] = space + "_" + std::to_string(opt.n);
    Json torsion = Json::array();
    for (const auto& d : inv.torsion) torsion.push_back(d.str());
    j["torsion"] = std::move(torsion);
    j["free_rank"] = inv.free_rank;
    j["group"] = inv.to_string();
    emit(opt, j);
    return 0;
}

std::string theta_to_string(const std::vector<exactlin::Rational>& theta) {
    std::string out = "(";
    for (size_t i = 0; i < theta.size(); ++i) {
        if (i) out += ", ";
        out += theta[i].str();
    }
    return out + ")";
}

int run_dihedral(const Options& opt) {
    io::KnotData data = load_lin(opt.input);
    reps::DihedralEnumeration e = reps::enumerate_dihedral(data.lin, tolerances(opt));
    std::cout << "solutions: " << e.solutions.size() << "\n";
    std::cout << "nontrivial classes: " << e.nontrivial_class_count << "\n";
    for (size_t c = 0; c < e.classes.size(); ++c) {
        std::cout << "class " << c << ": theta = " << theta_to_string(e.classes[c]);
        bool trivial = true;
        for (const auto& t : e.classes[c])
            if (t != 0) trivial = false;
        if (trivial) std::cout << " [trivial]";
        std::cout << "\n";
    }
    for (size_t c = 0; c < e.representatives.size(); ++c)
        std::cout << "class " << c
                  << " residual = " << io::format_real(e.representatives[c].relation_residual())
                  << "\n";

    Json j;
    j["solution_count"] = e.solutions.size();
    j["nontrivial_class_count"] = e.nontrivial_class_count;
    Json solutions = Json::array();
    for (const auto& s : e.solutions) {
        Json sj;
        sj["theta"] = Json::array();
        for (const auto& t : s.theta) sj["theta"].push_back(t.str());
        sj["class_id"] = s.class_id;
        sj["trivial"] = s.trivial;
        solutions.push_back(std::move(sj));
    }
    j["solutions"] = std::move(solutions);
    Json representations = Json::array();
    Json descriptor = io::knot_data_to_json(data);
    for (const auto& rep : e.representatives)
        representations.push_back(io::representation_to_json(rep, descriptor));
    j["representations"] = std::move(representations);
    emit(opt, j);
    return 0;
}

int run_phi(const Options& opt) {
    Json rep_json = io::read_json_file(opt.rep_file);
    if (!rep_json.contains("presentation"))
        throw ArgumentError("representation file lacks \"presentation\"");
    Json pres_json = rep_json.at("presentation");
    if (pres_json.is_string()) pres_json = io::read_json_file(pres_json.get<std::string>());
    io::KnotData data = io::parse_knot_data(pres_json);
    if (data.kind != io::KnotData::Kind::lin)
        throw ArgumentError("phi needs a representation over Lin-type knot data");
    reps::Representation rep = io::parse_representation(rep_json);

    reps::Representation lifted = reps::phi_n(data.lin, rep, opt.n, opt.k, tolerances(opt));
    reps::VerifyReport report = reps::verify(lifted);
    std::cout << "lifted to Sigma_" << opt.n << ": " << lifted.pres().generator_count()
              << " generators\n";
    std::cout << "max relator residual = " << io::format_real(report.max_residual) << "\n";
    auto cert = reps::tau_equivariance(lifted, tolerances(opt));
    if (cert) {
        std::cout << "tau-equivariance certificate C =\n";
        std::cout << "  [" << io::format_complex(cert->a) << ", " << io::format_complex(cert->b)
                  << "]\n";
        std::cout << "  [" << io::format_complex(cert->c) << ", " << io::format_complex(cert->d)
                  << "]\n";
    } else {
        std::cout << "tau-equivariance certificate: absent\n";
    }

    Json j;
    Json lift_desc;
    lift_desc["type"] = "lift";
    lift_desc["base"] = io::knot_data_to_json(data);
    lift_desc["n"] = opt.n;
    lift_desc["cover"] = "branched";
    j["representation"] = io::representation_to_json(lifted, lift_desc);
    j["max_residual"] = report.max_residual;
    j["equivariant"] = cert.has_value();
    if (cert) {
        Json cj = Json::array();
        for (sl2::Complex z : {cert->a, cert->b, cert->c, cert->d})
            cj.push_back(Json::array({z.real(), z.imag()}));
        j["certificate"] = std::move(cj);
    }
    emit(opt, j);
    return 0;
}

int run_riley(const Options& opt) {
    io::KnotData data = io::load_knot_data(opt.input);
    if (data.kind != io::KnotData::Kind::twobridge)
        throw ArgumentError("riley needs two-bridge knot data");
    twobridge::TwoBridgeKnot knot =
        twobridge::make_two_bridge(data.tb_word, data.tb_determinant, data.name);
    twobridge::GaussianPoly phi = twobridge::riley_polynomial_minus1(knot.w);
    std::cout << "phi(-1, u) = " << phi.to_string() << "\n";
    std::cout << "p = " << knot.p << "\n";

    auto numeric = twobridge::polynomial_roots(phi);
    std::cout << "numeric roots:";
    for (auto r : numeric) std::cout << " " << io::format_real(r.real());
    std::cout << "\n";

    bool match = true;
    std::vector<double> closed;
    if (knot.p >= 3) {
        closed = twobridge::closed_form_roots(knot.p);
        std::sort(closed.begin(), closed.end());
        std::cout << "closed-form roots:";
        for (double r : closed) std::cout << " " << io::format_real(r);
        std::cout << "\n";
        if (closed.size() != numeric.size()) match = false;
        auto defect = twobridge::riley_defect(knot.w);
        for (size_t i = 0; i < closed.size() && match; ++i) {
            if (std::abs(numeric[i].real() - closed[i]) > 1e-6 ||
                std::abs(numeric[i].imag()) > 1e-6)
                match = false;
            for (const twobridge::GaussianPoly* e :
                 {&defect.a, &defect.b, &defect.c, &defect.d})
                if (std::abs(e->evaluate({closed[i], 0.0})) > 1e-9) match = false;
        }
    }
    std::cout << "roots match closed form: " << (match ? "OK" : "MISMATCH") << "\n";

    Json j;
    j["phi"] = phi.to_string();
    j["p"] = knot.p;
    Json num = Json::array(), cf = Json::array();
    for (auto r : numeric) num.push_back(r.real());
    for (double r : closed) cf.push_back(r);
    j["numeric_roots"] = std::move(num);
    j["closed_form_roots"] = std::move(cf);
    j["match"] = match;
    emit(opt, j);
    return match ? 0 : 1;
}

int run_pretzel(const Options& opt) {
    io::KnotData data = io::load_knot_data(opt.input);
    if (data.kind != io::KnotData::Kind::pretzel)
        throw ArgumentError("pretzel needs pretzel knot data");
    auto report = pretzel::surjectivity_report(data.p, data.q, data.r, tolerances(opt));
    std::cout << pretzel::report_to_text(report);

    Json j;
    j["p"] = report.p;
    j["q"] = report.q;
    j["r"] = report.r;
    j["admissible"] = report.admissible_count;
    j["verified"] = report.verified_count;
    j["irreducible"] = report.irreducible_count;
    j["equivariant_irreducible"] = report.equivariant_irreducible_count;
    j["distinct_characters"] = report.distinct_character_count;
    j["all_irreducible_equivariant"] = report.all_irreducible_equivariant;
    Json records = Json::array();
    for (const auto& rec : report.records) {
        if (!rec.admissible) continue;
        Json rj;
        rj["epsilon"] = rec.params.epsilon;
        rj["m1"] = rec.params.m1;
        rj["m2"] = rec.params.m2;
        rj["m3"] = rec.params.m3;
        rj["residual"] = rec.residual;
        rj["irreducible"] = rec.irreducible;
        rj["equivariant"] = rec.equivariant;
        records.push_back(std::move(rj));
    }
    j["records"] = std::move(records);
    emit(opt, j);
    return report.all_irreducible_equivariant ? 0 : 1;
}

int run_verify(const Options& opt) {
    reps::Representation rep = io::load_representation(opt.rep_file);
    reps::VerifyReport report = reps::verify(rep);
    std::cout << "relators: " << report.per_relator.size() << "\n";
    for (size_t i = 0; i < report.per_relator.size(); ++i)
        std::cout << "relator " << i << " residual = " << io::format_real(report.per_relator[i])
                  << "\n";
    std::cout << "max residual = " << io::format_real(report.max_residual) << "\n";
    bool ok = report.max_residual <= opt.tol;
    std::cout << "verified: " << (ok ? "yes" : "NO") << "\n";
    bool irr = reps::is_irreducible(rep);
    std::cout << "irreducible: " << (irr ? "yes" : "no") << "\n";
    if (rep.pres().meridian) {
        std::cout << "metabelian: " << (reps::is_metabelian(rep) ? "yes" : "no") << "\n";
        std::cout << "slice trace = " << io::format_complex(reps::slice_trace(rep)) << "\n";
    }

    Json j;
    j["residuals"] = report.per_relator;
    j["max_residual"] = report.max_residual;
    j["verified"] = ok;
    j["irreducible"] = irr;
    if (rep.pres().meridian) {
        j["metabelian"] = reps::is_metabelian(rep);
        sl2::Complex st = reps::slice_trace(rep);
        j["slice_trace"] = Json::array({st.real(), st.imag()});
    }
    emit(opt, j);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL2(C) character variety slice toolkit: knot groups, branched covers,"
                 " metabelian representations"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--tol", opt.tol, "relator residual tolerance (matrix tolerance = tol/10)");

    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial from Lin data");
    alexander->add_option("input", opt.input, "knot data JSON")->required();
    alexander->add_option("--json", opt.json_out, "write a JSON report");

    auto* homology = app.add_subcommand("homology", "homology of the n-fold cover");
    homology->add_option("input", opt.input, "knot data JSON")->required();
    homology->add_option("--n", opt.n, "cover degree")->required();
    homology->add_flag("--unbranched", opt.unbranched, "cyclic cover of the exterior");
    homology->add_option("--json", opt.json_out, "write a JSON report");

    auto* dihedral = app.add_subcommand("dihedral", "binary dihedral slice representatives");
    dihedral->add_option("input", opt.input, "knot data JSON")->required();
    dihedral->add_option("--json", opt.json_out, "write solutions and representations");

    auto* phi = app.add_subcommand("phi", "lift a slice representation to the branched cover");
    phi->add_option("--rep", opt.rep_file, "representation JSON")->required();
    phi->add_option("--n", opt.n, "cover degree")->required();
    int k_value = -1;
    phi->add_option("--k", k_value, "slice index k (inferred when omitted)");
    phi->add_option("--json", opt.json_out, "write the lifted representation");

    auto* riley = app.add_subcommand("riley", "Riley polynomial at t = -1 and its roots");
    riley->add_option("input", opt.input, "two-bridge knot data JSON")->required();
    riley->add_option("--json", opt.json_out, "write a JSON report");

    auto* pretzel_cmd = app.add_subcommand("pretzel", "tau_2 surjectivity sweep for (p,q,r)");
    pretzel_cmd->add_option("input", opt.input, "pretzel knot data JSON")->required();
    pretzel_cmd->add_option("--json", opt.json_out, "write a JSON report");

    auto* verify = app.add_subcommand("verify", "check relators and classify a representation");
    verify->add_option("--rep", opt.rep_file, "representation JSON")->required();
    verify->add_option("--json", opt.json_out, "write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (phi->parsed() && k_value >= 0) opt.k = k_value;

    try {
        if (alexander->parsed()) return run_alexander(opt);
        if (homology->parsed()) return run_homology(opt);
        if (dihedral->parsed()) return run_dihedral(opt);
        if (phi->parsed()) return run_phi(opt);
        if (riley->parsed()) return run_riley(opt);
        if (pretzel_cmd->parsed()) return run_pretzel(opt);
        if (verify->parsed()) return run_verify(opt);
    } catch (const ArgumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const LookupError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DataConsistencyError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidKnotDataError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
